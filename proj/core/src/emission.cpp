#include "pairlight/emission.hpp"

#include <algorithm>
#include <cmath>

#include "pairlight/errors.hpp"
#include "pairlight/parallel.hpp"

namespace pairlight {

double fermi_function(double e, double temperature) noexcept {
    const double x = e / temperature;
    if (x >= 0.0) {
        const double q = std::exp(-x);
        return q / (1.0 + q);
    }
    return 1.0 / (1.0 + std::exp(x));
}

double bogoliubov_energy(const KPoint& k, Helicity xi, const BandParams& p, const GapSpec& g) noexcept {
    return std::hypot(helical_dispersion(k, xi, p), projected_gap(k, xi, g));
}

double gaussian_delta(double x, double sigma) noexcept {
    return std::exp(-x * x / (2.0 * sigma * sigma)) / (sigma * std::sqrt(kTwoPi));
}

PhotonPair::PhotonPair(double omega1, double omega2, double band_gap)
    : omega1_(omega1), omega2_(omega2), band_gap_(band_gap) {
    const double scale = std::max({1.0, std::abs(omega1), std::abs(omega2), std::abs(band_gap)});
    if (!(std::abs(omega1 + omega2 - 2.0 * band_gap) <= 1e-12 * scale)) {
        throw ValidationError("omega", "photon energies must add up to twice the band gap");
    }
}

PhotonPair PhotonPair::from_omega1(double omega1, double band_gap) {
    return PhotonPair(omega1, 2.0 * band_gap - omega1, band_gap);
}

void EmissionParams::validate() const {
    if (!(temperature > 0.0)) throw ValidationError("temperature", "must be positive");
    if (!(sigma_delta > 0.0)) throw ValidationError("sigma_delta", "must be positive");
    if (!std::isfinite(b_matrix_element)) throw ValidationError("b_matrix_element", "must be finite");
}

namespace {

// Denominator printed as a single squared resonance factor.
double squared_resonance(double x, double sigma) noexcept { return x * x + sigma * sigma; }

// One factor of a printed product of two resonance factors; keeps the sign,
// floors the magnitude at sigma.
double floored(double x, double sigma) noexcept { return x >= 0.0 ? std::max(x, sigma) : std::min(x, -sigma); }

// The seven bracket terms for photon energies (w1, w2). Bare E_k in the
// printed denominators is read as E_{k,xi}; n_F(E) n_F(E) is a square.
std::array<double, 7> bracket_terms(double qp, double eps, double w1, double w2, double nf, double sigma) noexcept {
    const double a1 = qp - w1 + eps;
    const double b1 = qp + w1 - eps;
    const double a2 = qp - w2 + eps;
    const double b2 = qp + w2 - eps;
    const double hole = 1.0 - nf;
    return {
        nf * nf / squared_resonance(a1, sigma),                               // term 1
        hole / squared_resonance(b1, sigma),                                  // term 2
        2.0 * nf * nf / (floored(b1, sigma) * floored(b1, sigma)),            // term 3, repeated factor kept
        nf * nf / (floored(a1, sigma) * floored(a2, sigma)),                  // term 4
        hole * hole / (floored(b1, sigma) * floored(b2, sigma)),              // term 5
        nf * hole / (floored(b1, sigma) * floored(a2, sigma)),                // term 6
        nf * hole / (floored(a1, sigma) * floored(b2, sigma)),                // term 7
    };
}

double sum(const std::array<double, 7>& t) noexcept {
    double s = 0.0;
    for (double x : t) s += x;
    return s;
}

}  // namespace

ZetaTerms zeta_terms(const KPoint& k, Helicity xi, const PhotonPair& pair, const BandParams& p, const GapSpec& g,
                     const EmissionParams& e) noexcept {
    ZetaTerms z;
    z.energy = helical_dispersion(k, xi, p);
    z.gap = projected_gap(k, xi, g);
    z.qp_energy = std::hypot(z.energy, z.gap);
    if (!pairing_fractions(k, xi, g).defined || z.qp_energy == 0.0) return z;

    const double nf = fermi_function(z.qp_energy, e.temperature);
    const double n_hole = fermi_function(-z.qp_energy, e.temperature);
    const double coherence = z.gap / (2.0 * z.qp_energy);
    const double b2 = e.b_matrix_element * e.b_matrix_element;
    z.prefactor = 2.0 * kTwoPi * b2 * b2 * coherence * coherence * n_hole * n_hole;

    const double w1 = pair.omega1();
    const double w2 = pair.omega2();
    z.direct = bracket_terms(z.qp_energy, z.energy, w1, w2, nf, e.sigma_delta);
    z.exchange = bracket_terms(z.qp_energy, z.energy, w2, w1, nf, e.sigma_delta);
    z.bracket = sum(z.direct) + sum(z.exchange);
    z.delta = gaussian_delta(w1 + w2 - 2.0 * z.energy, e.sigma_delta);
    z.raw = z.prefactor * z.bracket * z.delta;
    return z;
}

double zeta_weight(const KPoint& k, Helicity xi, const PhotonPair& pair, const BandParams& p, const GapSpec& g,
                   const EmissionParams& e) noexcept {
    // Cross terms can push the regularized bracket slightly below zero when
    // both resonances sit within sigma of each other.
    return std::max(0.0, zeta_terms(k, xi, pair, p, g, e).raw);
}

EmissionResult two_photon_density_matrix(const PhotonPair& pair, const BandParams& p, const GapSpec& g,
                                         const PolarizationAxis& pol, const KGrid& grid, const EmissionParams& e) {
    p.validate();
    g.validate();
    e.validate();

    TwoPhotonMatrix rho = chunked_reduce(
        grid.size(), TwoPhotonMatrix{},
        [&](std::size_t begin, std::size_t end, TwoPhotonMatrix& acc) {
            for (std::size_t i = begin; i < end; ++i) {
                for (Helicity xi : kHelicities) {
                    const EmissionWeights w = emission_weights(grid[i], xi, g, pol);
                    if (!w.defined) continue;
                    const double zeta = zeta_weight(grid[i], xi, pair, p, g, e);
                    if (zeta == 0.0) continue;
                    TwoPhotonMatrix m = emission_matrix(w);
                    m *= zeta;
                    acc += m;
                }
            }
        },
        [](TwoPhotonMatrix& lhs, const TwoPhotonMatrix& rhs) { lhs += rhs; });
    rho *= 0.5 * grid.weight();

    EmissionResult out{rho, std::nullopt, pair, p, g, pol, e, grid.n()};
    const double tr = rho.trace();
    if (tr > 0.0) {
        TwoPhotonMatrix normalized = rho;
        for (double& x : normalized.m) x /= tr;
        out.rho_normalized = normalized;
    }
    return out;
}

}  // namespace pairlight
