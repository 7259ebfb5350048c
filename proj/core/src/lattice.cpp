#include "pairlight/lattice.hpp"

#include <cmath>

#include "pairlight/errors.hpp"

namespace pairlight {

double wrap_to_zone(double k) {
    double w = k - kTwoPi * std::floor((k + kPi) / kTwoPi);
    // floor() rounding can leave w == pi for inputs just below pi.
    if (w >= kPi) w -= kTwoPi;
    if (w < -kPi) w = -kPi;
    return w;
}

KGrid::KGrid(int n) : n_(n), weight_(0.0) {
    if (n < 2) throw ValidationError("n", "grid needs at least 2 points per axis, got " + std::to_string(n));
    const auto count = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
    weight_ = 1.0 / static_cast<double>(count);
    coords_.resize(static_cast<std::size_t>(n));
    const int offset = n / 2;
    for (int i = 0; i < n; ++i) {
        coords_[static_cast<std::size_t>(i)] = kTwoPi * static_cast<double>(i - offset) / n;
    }
    points_.reserve(count);
    for (int ix = 0; ix < n; ++ix) {
        for (int iy = 0; iy < n; ++iy) {
            points_.push_back({coordinate(ix), coordinate(iy)});
        }
    }
}

int KGrid::axis_index(double k) const noexcept {
    const auto m = static_cast<long>(std::lround(wrap_to_zone(k) * n_ / kTwoPi)) + n_ / 2;
    return static_cast<int>(((m % n_) + n_) % n_);
}

std::size_t KGrid::index_of(const KPoint& k) const noexcept {
    return static_cast<std::size_t>(axis_index(k.kx)) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(axis_index(k.ky));
}

KGrid make_grid(int n) { return KGrid(n); }

SymmetryPath high_symmetry_path(int samples_per_leg) {
    if (samples_per_leg < 2) {
        throw ValidationError("samples_per_leg", "need at least 2 samples per leg, got " +
                                                     std::to_string(samples_per_leg));
    }
    const std::array<PathVertex, 4> corners{{
        {"Gamma", {0.0, 0.0}, 0},
        {"K", {kPi, 0.0}, 0},
        {"M", {kPi, kPi}, 0},
        {"Gamma", {0.0, 0.0}, 0},
    }};

    SymmetryPath path;
    path.samples_per_leg = samples_per_leg;
    path.points.push_back(corners[0].k);
    path.distance.push_back(0.0);
    path.vertices.push_back(corners[0]);

    const int steps = samples_per_leg - 1;
    double travelled = 0.0;
    for (std::size_t leg = 0; leg + 1 < corners.size(); ++leg) {
        const KPoint a = corners[leg].k;
        const KPoint b = corners[leg + 1].k;
        const double length = std::hypot(b.kx - a.kx, b.ky - a.ky);
        for (int s = 1; s <= steps; ++s) {
            const double f = static_cast<double>(s) / steps;
            // Endpoints are taken verbatim so vertices are exact.
            const KPoint k = s == steps ? b : KPoint{a.kx + f * (b.kx - a.kx), a.ky + f * (b.ky - a.ky)};
            path.points.push_back(k);
            path.distance.push_back(travelled + f * length);
        }
        travelled += length;
        PathVertex v = corners[leg + 1];
        v.sample_index = path.points.size() - 1;
        path.vertices.push_back(v);
    }
    return path;
}

std::array<KPoint, 8> c4v_images(const KPoint& k) {
    const double x = k.kx;
    const double y = k.ky;
    std::array<KPoint, 8> out{{
        {x, y},
        {-y, x},
        {-x, -y},
        {y, -x},
        {x, -y},
        {-x, y},
        {y, x},
        {-y, -x},
    }};
    for (auto& p : out) p = {wrap_to_zone(p.kx), wrap_to_zone(p.ky)};
    return out;
}

}  // namespace pairlight
