#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "pairlight/band.hpp"
#include "pairlight/lattice.hpp"
#include "pairlight/pairing.hpp"

namespace pairlight {

/// Photon polarization axis (sin th cos ph, sin th sin ph, cos th).
class PolarizationAxis {
public:
    PolarizationAxis() : PolarizationAxis(0.0, 0.0) {}
    /// Throws ValidationError unless theta in [0, pi] and phi in [0, 2 pi).
    PolarizationAxis(double theta, double phi);

    double theta() const noexcept { return theta_; }
    double phi() const noexcept { return phi_; }
    const std::array<double, 3>& vec() const noexcept { return vec_; }

private:
    double theta_;
    double phi_;
    std::array<double, 3> vec_;
};

/// Two-photon polarization basis order.
enum PhotonBasis : std::size_t { LL = 0, LR = 1, RL = 2, RR = 3 };

/// Real 4x4 matrix in the (LL, LR, RL, RR) basis, row-major.
struct TwoPhotonMatrix {
    std::array<double, 16> m{};

    double& operator()(std::size_t row, std::size_t col) { return m[4 * row + col]; }
    double operator()(std::size_t row, std::size_t col) const { return m[4 * row + col]; }

    double trace() const noexcept { return m[0] + m[5] + m[10] + m[15]; }

    TwoPhotonMatrix& operator+=(const TwoPhotonMatrix& rhs) noexcept {
        for (std::size_t i = 0; i < 16; ++i) m[i] += rhs.m[i];
        return *this;
    }
    TwoPhotonMatrix& operator*=(double s) noexcept {
        for (double& x : m) x *= s;
        return *this;
    }

    friend bool operator==(const TwoPhotonMatrix&, const TwoPhotonMatrix&) = default;
};

/// Angle between the d-vector at k and the polarization axis. Throws
/// std::domain_error where d_k vanishes.
double mixing_angle(const KPoint& k, const GapSpec& g, const PolarizationAxis& pol);

/// The two scalars that fill M: eta on the LR/RL block, upsilon on LL and RR.
struct EmissionWeights {
    double eta = 0.0;
    double upsilon = 0.0;
    bool defined = false;
};

EmissionWeights emission_weights(const KPoint& k, Helicity xi, const GapSpec& g, const PolarizationAxis& pol) noexcept;

/// Builds the per-(k, xi) emission matrix; zero on full gap nodes.
TwoPhotonMatrix emission_matrix(const KPoint& k, Helicity xi, const GapSpec& g, const PolarizationAxis& pol) noexcept;
TwoPhotonMatrix emission_matrix(const EmissionWeights& w) noexcept;

/// Purity evaluator that tabulates the structure factors and g-vectors of
/// one grid once, so repeated evaluations over (channel, r, axis) only do
/// arithmetic. Results are bit-identical to the per-point functions above.
class PurityEvaluator {
public:
    PurityEvaluator(const KGrid& grid, double theta_gap);

    double operator()(SingletChannel channel, double r, double delta0, const PolarizationAxis& pol) const;
    double operator()(const GapSpec& g, const PolarizationAxis& pol) const;

    double theta_gap() const noexcept { return theta_gap_; }
    std::size_t size() const noexcept { return g_.size(); }

private:
    double theta_gap_;
    double weight_;
    std::array<std::vector<double>, 4> f_;
    std::vector<Vec2> g_;
};

/// Purity of the emitted two-photon state,
///   (1/2N) sum_{k,xi} [ b^4 sin^4 s + 2 (a^2 + b^2 cos^2 s)^2 ],
/// where s is the mixing angle. Full gap nodes contribute zero.
double purity(const GapSpec& g, const PolarizationAxis& pol, const KGrid& grid);

}  // namespace pairlight
