#include "pairlight/band.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "pairlight/emission.hpp"
#include "pairlight/errors.hpp"
#include "pairlight/parallel.hpp"

namespace pairlight {

void BandParams::validate() const {
    if (!(t > 0.0)) throw ValidationError("t", "hopping must be positive");
    if (!(lambda >= 0.0)) throw ValidationError("lambda", "spin-orbit strength must be >= 0");
    if (!(theta_soc >= 0.0 && theta_soc <= kPi / 2)) {
        throw ValidationError("theta_soc", "mixing angle must lie in [0, pi/2]");
    }
    if (!std::isfinite(mu)) throw ValidationError("mu", "chemical potential must be finite");
}

double norm(const Vec2& v) noexcept { return std::hypot(v.x, v.y); }

double kinetic_energy(const KPoint& k, const BandParams& p) noexcept {
    return -p.mu - 2.0 * p.t * (std::cos(k.kx) + std::cos(k.ky));
}

Vec2 soc_vector(const KPoint& k, double theta_soc) noexcept {
    const double c = std::cos(theta_soc);
    const double s = std::sin(theta_soc);
    const double sx = std::sin(k.kx);
    const double sy = std::sin(k.ky);
    return {c * sy + s * sx, -c * sx - s * sy};
}

double helical_dispersion(const KPoint& k, Helicity xi, const BandParams& p) noexcept {
    // hypot of the components avoids the sqrt blow-up of rounding residue
    // near the degeneracy line at theta = pi/4.
    return kinetic_energy(k, p) + sign(xi) * p.lambda * norm(soc_vector(k, p.theta_soc));
}

double DosCurve::integral() const {
    double sum = 0.0;
    for (std::size_t i = 1; i < energies.size(); ++i) {
        sum += 0.5 * (density[i] + density[i - 1]) * (energies[i] - energies[i - 1]);
    }
    return sum;
}

namespace {

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
};

Range spectrum_range(const BandParams& p, const KGrid& grid) {
    return chunked_reduce(
        grid.size(), Range{},
        [&](std::size_t begin, std::size_t end, Range& r) {
            for (std::size_t i = begin; i < end; ++i) {
                for (Helicity xi : kHelicities) {
                    const double e = helical_dispersion(grid[i], xi, p);
                    r.lo = std::min(r.lo, e);
                    r.hi = std::max(r.hi, e);
                }
            }
        },
        [](Range& a, const Range& b) {
            a.lo = std::min(a.lo, b.lo);
            a.hi = std::max(a.hi, b.hi);
        });
}

constexpr double kDosCutoff = 8.0;  // Gaussian tails beyond 8 sigma are < 1e-13 relative

}  // namespace

std::vector<double> dos_energy_mesh(const BandParams& p, const KGrid& grid, double sigma_e, int points) {
    if (!(sigma_e > 0.0)) throw ValidationError("sigma_E", "smearing must be positive");
    if (points < 2) throw ValidationError("energy_points", "need at least 2 mesh points");
    const Range r = spectrum_range(p, grid);
    const double lo = r.lo - 5.0 * sigma_e;
    const double hi = r.hi + 5.0 * sigma_e;
    std::vector<double> mesh(static_cast<std::size_t>(points));
    for (int i = 0; i < points; ++i) {
        // Evaluated from both ends so a symmetric spectrum gives a symmetric mesh.
        const double from_lo = static_cast<double>(i) / (points - 1);
        const double from_hi = static_cast<double>(points - 1 - i) / (points - 1);
        mesh[static_cast<std::size_t>(i)] = i < points / 2 ? lo + from_lo * (hi - lo) : hi - from_hi * (hi - lo);
    }
    return mesh;
}

DosCurve dos(const BandParams& p, const KGrid& grid, const std::vector<double>& mesh, double sigma_e) {
    if (!(sigma_e > 0.0)) throw ValidationError("sigma_E", "smearing must be positive");
    if (mesh.size() < 2) throw ValidationError("mesh", "energy mesh needs at least 2 points");
    const double step = (mesh.back() - mesh.front()) / static_cast<double>(mesh.size() - 1);
    if (!(step > 0.0)) throw ValidationError("mesh", "energy mesh must be increasing");
    for (std::size_t i = 1; i < mesh.size(); ++i) {
        if (std::abs(mesh[i] - mesh[i - 1] - step) > 1e-9 * std::abs(step) + 1e-12) {
            throw ValidationError("mesh", "energy mesh must be uniform");
        }
    }
    const Range r = spectrum_range(p, grid);
    const double slack = 1e-9 * std::max(1.0, std::abs(r.lo) + std::abs(r.hi));
    if (mesh.front() > r.lo - 5.0 * sigma_e + slack || mesh.back() < r.hi + 5.0 * sigma_e - slack) {
        throw ValidationError("mesh", "energy mesh must span [min eps - 5 sigma, max eps + 5 sigma]");
    }

    const double lo = mesh.front();
    const auto last = static_cast<long>(mesh.size()) - 1;
    const double norm_factor = grid.weight() / (sigma_e * std::sqrt(kTwoPi));
    const double inv_two_var = 1.0 / (2.0 * sigma_e * sigma_e);
    const double reach = kDosCutoff * sigma_e;

    std::vector<double> zero(mesh.size(), 0.0);
    auto density = chunked_reduce(
        grid.size(), zero,
        [&](std::size_t begin, std::size_t end, std::vector<double>& acc) {
            for (std::size_t i = begin; i < end; ++i) {
                for (Helicity xi : kHelicities) {
                    const double e = helical_dispersion(grid[i], xi, p);
                    const long first = std::max(0L, static_cast<long>(std::ceil((e - reach - lo) / step)));
                    const long stop = std::min(last, static_cast<long>(std::floor((e + reach - lo) / step)));
                    for (long j = first; j <= stop; ++j) {
                        const double x = mesh[static_cast<std::size_t>(j)] - e;
                        acc[static_cast<std::size_t>(j)] += std::exp(-x * x * inv_two_var);
                    }
                }
            }
        },
        [](std::vector<double>& a, const std::vector<double>& b) {
            for (std::size_t j = 0; j < a.size(); ++j) a[j] += b[j];
        });
    for (double& d : density) d *= norm_factor;
    return DosCurve{mesh, std::move(density), sigma_e};
}

namespace {

double filling_from_bare(const std::vector<double>& bare, double mu, double temperature) {
    return chunked_sum(bare.size(), [&](std::size_t i) { return fermi_function(bare[i] - mu, temperature); }) /
           static_cast<double>(bare.size() / 2);
}

}  // namespace

double filling(const BandParams& p, const KGrid& grid, double temperature) {
    if (!(temperature > 0.0)) throw ValidationError("temperature", "must be positive");
    return chunked_sum(grid.size(),
                       [&](std::size_t i) {
                           return fermi_function(helical_dispersion(grid[i], Helicity::plus, p), temperature) +
                                  fermi_function(helical_dispersion(grid[i], Helicity::minus, p), temperature);
                       }) *
           grid.weight();
}

double solve_mu(double target_n, const BandParams& p, const KGrid& grid, double temperature, double tol) {
    if (!(target_n > 0.0 && target_n < 2.0)) {
        throw ValidationError("filling", "target filling must lie in (0, 2), got " + std::to_string(target_n));
    }
    if (!(tol > 0.0)) throw ValidationError("tol", "tolerance must be positive");
    if (!(temperature > 0.0)) throw ValidationError("temperature", "must be positive");

    // eps(mu) = eps(0) - mu, so the mu-independent part is tabulated once.
    BandParams bare_params = p;
    bare_params.mu = 0.0;
    std::vector<double> bare(2 * grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        bare[2 * i] = helical_dispersion(grid[i], Helicity::plus, bare_params);
        bare[2 * i + 1] = helical_dispersion(grid[i], Helicity::minus, bare_params);
    }

    const double bound = 4.0 * p.t + p.lambda + 10.0 * temperature;
    double lo = -bound;
    double hi = bound;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket exhausted at double resolution
        const double n = filling_from_bare(bare, mid, temperature);
        if (std::abs(n - target_n) <= tol) return mid;
        (n < target_n ? lo : hi) = mid;
    }
    throw std::runtime_error("solve_mu: filling " + std::to_string(target_n) + " not reached within tolerance " +
                             std::to_string(tol));
}

}  // namespace pairlight
