#pragma once

#include <string>
#include <string_view>

#include "pairlight/band.hpp"
#include "pairlight/lattice.hpp"

namespace pairlight {

/// Even-parity (singlet) channels allowed on the square lattice.
enum class SingletChannel { s, s_star, d_x2y2, d_xy };

inline constexpr SingletChannel kSingletChannels[4] = {SingletChannel::s, SingletChannel::s_star,
                                                       SingletChannel::d_x2y2, SingletChannel::d_xy};

/// Canonical config/CLI label: "s", "s-star", "dx2y2", "dxy".
std::string_view to_string(SingletChannel channel) noexcept;

/// Case-insensitive inverse of to_string; throws ValidationError("channel").
SingletChannel parse_channel(std::string_view label);

/// Parity-mixed gap: singlet psi_k = r delta0 f_k, triplet
/// d_k = (1 - r) delta0 g_k(theta_gap).
struct GapSpec {
    SingletChannel channel = SingletChannel::s;
    double r = 1.0;
    double delta0 = 0.2;
    /// Mixing angle of the g-vector that fixes the d-vector direction. Kept
    /// separate from the band's theta_soc.
    double theta_gap = 0.0;

    void validate() const;

    /// Gap magnitude below which a point counts as a full node.
    double node_tolerance() const noexcept { return 1e-9 * delta0; }
};

double structure_factor(SingletChannel channel, const KPoint& k) noexcept;

double singlet_gap(const KPoint& k, const GapSpec& g) noexcept;

Vec2 triplet_dvector(const KPoint& k, const GapSpec& g) noexcept;

/// Gap on helical band xi: psi_k + xi |d_k|.
double projected_gap(const KPoint& k, Helicity xi, const GapSpec& g) noexcept;

/// Singlet and triplet weights a = psi/|Delta|, b = xi |d|/|Delta| with
/// |Delta| = sqrt(psi^2 + |d|^2). `defined` is false on full gap nodes,
/// where a = b = 0.
struct PairingFractions {
    double a = 0.0;
    double b = 0.0;
    bool defined = false;
};

PairingFractions pairing_fractions(const KPoint& k, Helicity xi, const GapSpec& g) noexcept;

}  // namespace pairlight
