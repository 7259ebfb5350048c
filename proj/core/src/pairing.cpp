#include "pairlight/pairing.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "pairlight/errors.hpp"

namespace pairlight {

std::string_view to_string(SingletChannel channel) noexcept {
    switch (channel) {
        case SingletChannel::s: return "s";
        case SingletChannel::s_star: return "s-star";
        case SingletChannel::d_x2y2: return "dx2y2";
        case SingletChannel::d_xy: return "dxy";
    }
    return "?";
}

SingletChannel parse_channel(std::string_view label) {
    std::string lower(label);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    for (SingletChannel c : kSingletChannels) {
        if (lower == to_string(c)) return c;
    }
    throw ValidationError("channel", "unknown singlet channel '" + std::string(label) +
                                         "' (expected s, s-star, dx2y2 or dxy)");
}

void GapSpec::validate() const {
    if (!(r >= 0.0 && r <= 1.0)) throw ValidationError("r", "singlet/triplet ratio must lie in [0, 1]");
    if (!(delta0 > 0.0 && std::isfinite(delta0))) throw ValidationError("delta0", "gap magnitude must be positive");
    if (!(theta_gap >= 0.0 && theta_gap <= kPi / 2)) {
        throw ValidationError("theta_gap", "d-vector mixing angle must lie in [0, pi/2]");
    }
}

double structure_factor(SingletChannel channel, const KPoint& k) noexcept {
    switch (channel) {
        case SingletChannel::s: return 1.0;
        case SingletChannel::s_star: return std::cos(k.kx) + std::cos(k.ky);
        case SingletChannel::d_x2y2: return std::cos(k.kx) - std::cos(k.ky);
        case SingletChannel::d_xy: return std::sin(k.kx) * std::sin(k.ky);
    }
    return 0.0;
}

double singlet_gap(const KPoint& k, const GapSpec& g) noexcept {
    return g.r * g.delta0 * structure_factor(g.channel, k);
}

Vec2 triplet_dvector(const KPoint& k, const GapSpec& g) noexcept {
    const double amplitude = (1.0 - g.r) * g.delta0;
    const Vec2 dir = soc_vector(k, g.theta_gap);
    return {amplitude * dir.x, amplitude * dir.y};
}

double projected_gap(const KPoint& k, Helicity xi, const GapSpec& g) noexcept {
    return singlet_gap(k, g) + sign(xi) * norm(triplet_dvector(k, g));
}

PairingFractions pairing_fractions(const KPoint& k, Helicity xi, const GapSpec& g) noexcept {
    const double psi = singlet_gap(k, g);
    const double d = norm(triplet_dvector(k, g));
    const double magnitude = std::hypot(psi, d);
    if (!(magnitude > g.node_tolerance())) return {};
    return {psi / magnitude, sign(xi) * d / magnitude, true};
}

}  // namespace pairlight
