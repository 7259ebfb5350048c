#include "pairlight/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pairlight/errors.hpp"
#include "pairlight/parallel.hpp"

namespace pairlight {

PolarizationAxis::PolarizationAxis(double theta, double phi) : theta_(theta), phi_(phi) {
    if (!(theta >= 0.0 && theta <= kPi)) throw ValidationError("theta", "polar angle must lie in [0, pi]");
    if (!(phi >= 0.0 && phi < kTwoPi)) throw ValidationError("phi", "azimuthal angle must lie in [0, 2 pi)");
    const double st = std::sin(theta);
    vec_ = {st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
}

double mixing_angle(const KPoint& k, const GapSpec& g, const PolarizationAxis& pol) {
    const Vec2 d = triplet_dvector(k, g);
    const double len = norm(d);
    if (len == 0.0) throw std::domain_error("mixing_angle: d-vector vanishes, angle undefined");
    const auto& p = pol.vec();
    const double c = (p[0] * d.x + p[1] * d.y) / len;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

namespace {

// Shared per-(k, xi) kernel. Mirrors pairing_fractions() operation for
// operation so the tabulated and direct paths agree bitwise.
EmissionWeights weights_from_gap(double psi, const Vec2& d, Helicity xi, double node_tol,
                                 const std::array<double, 3>& p) noexcept {
    const double d_len = norm(d);
    const double magnitude = std::hypot(psi, d_len);
    if (!(magnitude > node_tol)) return {};
    const double a = psi / magnitude;
    const double b = sign(xi) * d_len / magnitude;
    const double a2 = a * a;
    const double b2 = b * b;
    const double len2 = d.x * d.x + d.y * d.y;
    if (len2 == 0.0) return {a2, 0.0, true};  // no triplet part, angle irrelevant

    const double proj = p[0] * d.x + p[1] * d.y;
    const double cos2 = std::min(1.0, proj * proj / len2);
    const double sin2 = 1.0 - cos2;
    return {a2 + b2 * cos2, 2.0 * b2 * sin2, true};
}

// b^4 sin^4 + 2 (a^2 + b^2 cos^2)^2 written in terms of upsilon and eta.
double purity_summand(const EmissionWeights& w) noexcept {
    return w.defined ? 0.25 * w.upsilon * w.upsilon + 2.0 * w.eta * w.eta : 0.0;
}

}  // namespace

EmissionWeights emission_weights(const KPoint& k, Helicity xi, const GapSpec& g,
                                 const PolarizationAxis& pol) noexcept {
    return weights_from_gap(singlet_gap(k, g), triplet_dvector(k, g), xi, g.node_tolerance(), pol.vec());
}

TwoPhotonMatrix emission_matrix(const EmissionWeights& w) noexcept {
    TwoPhotonMatrix m;
    if (!w.defined) return m;
    m(LL, LL) = w.upsilon;
    m(RR, RR) = w.upsilon;
    m(LR, LR) = w.eta;
    m(LR, RL) = w.eta;
    m(RL, LR) = w.eta;
    m(RL, RL) = w.eta;
    return m;
}

TwoPhotonMatrix emission_matrix(const KPoint& k, Helicity xi, const GapSpec& g,
                                const PolarizationAxis& pol) noexcept {
    return emission_matrix(emission_weights(k, xi, g, pol));
}

PurityEvaluator::PurityEvaluator(const KGrid& grid, double theta_gap)
    : theta_gap_(theta_gap), weight_(grid.weight()) {
    if (!(theta_gap >= 0.0 && theta_gap <= kPi / 2)) {
        throw ValidationError("theta_gap", "d-vector mixing angle must lie in [0, pi/2]");
    }
    for (auto& f : f_) f.resize(grid.size());
    g_.resize(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t c = 0; c < 4; ++c) f_[c][i] = structure_factor(kSingletChannels[c], grid[i]);
        g_[i] = soc_vector(grid[i], theta_gap);
    }
}

double PurityEvaluator::operator()(SingletChannel channel, double r, double delta0,
                                   const PolarizationAxis& pol) const {
    const GapSpec g{channel, r, delta0, theta_gap_};
    g.validate();
    const auto& f = f_[static_cast<std::size_t>(channel)];
    const double singlet_amp = r * delta0;
    const double triplet_amp = (1.0 - r) * delta0;
    const double tol = g.node_tolerance();
    const auto& p = pol.vec();
    const double total = chunked_sum(g_.size(), [&](std::size_t i) {
        const double psi = singlet_amp * f[i];
        const Vec2 d{triplet_amp * g_[i].x, triplet_amp * g_[i].y};
        return purity_summand(weights_from_gap(psi, d, Helicity::plus, tol, p)) +
               purity_summand(weights_from_gap(psi, d, Helicity::minus, tol, p));
    });
    return total * weight_ * 0.5;
}

double PurityEvaluator::operator()(const GapSpec& g, const PolarizationAxis& pol) const {
    if (g.theta_gap != theta_gap_) {
        throw ValidationError("theta_gap", "evaluator was tabulated for a different d-vector angle");
    }
    return (*this)(g.channel, g.r, g.delta0, pol);
}

double purity(const GapSpec& g, const PolarizationAxis& pol, const KGrid& grid) {
    g.validate();
    return PurityEvaluator(grid, g.theta_gap)(g, pol);
}

}  // namespace pairlight
