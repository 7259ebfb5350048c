#pragma once

#include <vector>

#include "pairlight/lattice.hpp"

namespace pairlight {

/// Normal-state single-band model with mixed Rashba/Dresselhaus coupling.
/// Energies are in units of the hopping t unless t is set otherwise.
struct BandParams {
    double t = 1.0;          ///< nearest-neighbour hopping, > 0
    double mu = 0.0;         ///< chemical potential
    double lambda = 0.5;     ///< spin-orbit strength, >= 0
    double theta_soc = 0.0;  ///< Rashba (0) to Dresselhaus (pi/2) mixing angle

    /// Throws ValidationError when a field is out of range.
    void validate() const;
};

/// Helicity label of the two spin-orbit split bands.
enum class Helicity : int { plus = 1, minus = -1 };

inline constexpr Helicity kHelicities[2] = {Helicity::plus, Helicity::minus};

constexpr double sign(Helicity xi) noexcept { return static_cast<int>(xi); }

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

double norm(const Vec2& v) noexcept;

double kinetic_energy(const KPoint& k, const BandParams& p) noexcept;

/// cos(theta) * (sin ky, -sin kx) + sin(theta) * (sin kx, -sin ky).
Vec2 soc_vector(const KPoint& k, double theta_soc) noexcept;

/// Energy of helical band xi: kinetic energy + xi * lambda * |g_k|.
double helical_dispersion(const KPoint& k, Helicity xi, const BandParams& p) noexcept;

struct DosCurve {
    std::vector<double> energies;
    std::vector<double> density;
    double smearing = 0.0;

    /// Trapezoidal integral over the energy mesh.
    double integral() const;
};

/// Uniform mesh covering [min eps - 5 sigma, max eps + 5 sigma] for the
/// band spectrum on `grid`.
std::vector<double> dos_energy_mesh(const BandParams& p, const KGrid& grid, double sigma_e, int points);

/// Gaussian-smeared density of states of both helical bands, weight 1/N per
/// (k, xi). Integrates to 2 over a mesh that covers the spectrum.
DosCurve dos(const BandParams& p, const KGrid& grid, const std::vector<double>& mesh, double sigma_e);

/// Mean occupation per site, summed over both helicities, in [0, 2].
double filling(const BandParams& p, const KGrid& grid, double temperature);

/// Bisection for the chemical potential giving `target_n`. `p.mu` is ignored.
double solve_mu(double target_n, const BandParams& p, const KGrid& grid, double temperature,
                double tol = 1e-10);

struct ContourLine {
    std::vector<KPoint> vertices;
    Helicity xi = Helicity::plus;
    bool closed = false;
};

struct FermiSurface {
    std::vector<ContourLine> contours;
    /// Upper bound on |eps| at any contour vertex (linear interpolation error
    /// along a cell edge).
    double tolerance = 0.0;
};

/// Zero level set of the xi band by marching squares over the closed zone
/// [-pi, pi]^2. Contours around Gamma come out closed; contours that cross
/// the zone edge are open polylines ending on it.
FermiSurface fermi_surface(const BandParams& p, const KGrid& grid, Helicity xi);

}  // namespace pairlight
