#pragma once

#include <array>
#include <cstddef>
#include <numbers>
#include <string>
#include <vector>

namespace pairlight {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Dimensionless crystal momentum of the square lattice (lattice constant 1).
struct KPoint {
    double kx = 0.0;
    double ky = 0.0;

    friend bool operator==(const KPoint&, const KPoint&) = default;
};

/// Maps an angle into [-pi, pi).
double wrap_to_zone(double k);

/// Uniform Gamma-centred n x n sampling of [-pi, pi)^2.
///
/// Point (ix, iy) sits at 2 pi (i - floor(n/2)) / n along each axis and is
/// stored row-major, index ix * n + iy. The zone centre is always a grid
/// point; for even n the zone corner (-pi, -pi) is as well.
class KGrid {
public:
    explicit KGrid(int n);

    int n() const noexcept { return n_; }
    std::size_t size() const noexcept { return points_.size(); }
    double weight() const noexcept { return weight_; }
    double spacing() const noexcept { return kTwoPi / n_; }

    const KPoint& operator[](std::size_t i) const { return points_[i]; }
    const std::vector<KPoint>& points() const noexcept { return points_; }
    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

    /// Coordinate of axis index i (0 <= i < n).
    double coordinate(int i) const noexcept { return coords_[static_cast<std::size_t>(i)]; }

    /// Axis index of a coordinate that lies on the grid (rounded to nearest).
    int axis_index(double k) const noexcept;
    std::size_t index_of(const KPoint& k) const noexcept;

private:
    int n_;
    double weight_;
    std::vector<double> coords_;
    std::vector<KPoint> points_;
};

/// Throws ValidationError for n < 2.
KGrid make_grid(int n);

struct PathVertex {
    std::string label;
    KPoint k;
    std::size_t sample_index;
};

/// Piecewise-linear Gamma -> K=(pi,0) -> M=(pi,pi) -> Gamma path. The
/// vertices on the zone edge are kept at +pi (not wrapped) so the path is
/// continuous; every function of k used here is 2 pi periodic.
struct SymmetryPath {
    std::vector<KPoint> points;
    /// Cumulative arc length along the path, starting at 0.
    std::vector<double> distance;
    std::vector<PathVertex> vertices;
    int samples_per_leg = 0;
};

SymmetryPath high_symmetry_path(int samples_per_leg);

/// Images of k under the eight C4v operations (identity, rotations by
/// pi/2, pi, 3pi/2, mirrors x, y, and both diagonals), wrapped into the zone.
std::array<KPoint, 8> c4v_images(const KPoint& k);

}  // namespace pairlight
