#pragma once

#include <array>
#include <optional>

#include "pairlight/band.hpp"
#include "pairlight/entanglement.hpp"
#include "pairlight/lattice.hpp"
#include "pairlight/pairing.hpp"

namespace pairlight {

/// 1 / (1 + exp(e / T)), evaluated without overflow for any e.
double fermi_function(double e, double temperature) noexcept;

/// sqrt(eps^2 + Delta^2) on helical band xi.
double bogoliubov_energy(const KPoint& k, Helicity xi, const BandParams& p, const GapSpec& g) noexcept;

/// Unit-normalized Gaussian of width sigma standing in for a delta function.
double gaussian_delta(double x, double sigma) noexcept;

/// Photon energies of one emitted pair; omega1 + omega2 = 2 band_gap.
class PhotonPair {
public:
    /// Throws ValidationError when the two energies violate energy conservation.
    PhotonPair(double omega1, double omega2, double band_gap);

    /// omega2 fixed by energy conservation.
    static PhotonPair from_omega1(double omega1, double band_gap);

    double omega1() const noexcept { return omega1_; }
    double omega2() const noexcept { return omega2_; }
    double band_gap() const noexcept { return band_gap_; }

    PhotonPair swapped() const { return PhotonPair(omega2_, omega1_, band_gap_); }

private:
    double omega1_;
    double omega2_;
    double band_gap_;
};

struct EmissionParams {
    double temperature = 0.01;
    /// Width of the energy-conserving Gaussian and floor of resonant denominators.
    double sigma_delta = 0.05;
    /// |B|, the constant light-matter matrix element.
    double b_matrix_element = 1.0;

    void validate() const;
};

/// Per-term breakdown of the pair-recombination weight. `direct[i]` is
/// bracket term i+1 evaluated at (omega1, omega2), `exchange[i]` the same
/// term with the photons swapped.
struct ZetaTerms {
    double energy = 0.0;       ///< eps_{k,xi}
    double gap = 0.0;          ///< Delta_{k,xi}
    double qp_energy = 0.0;    ///< E_{k,xi}
    double prefactor = 0.0;    ///< 4 pi |B|^4 |Delta / 2E|^2 n_F(-E)^2
    std::array<double, 7> direct{};
    std::array<double, 7> exchange{};
    double bracket = 0.0;
    double delta = 0.0;        ///< gaussian_delta(omega1 + omega2 - 2 eps)
    double raw = 0.0;          ///< prefactor * bracket * delta before clamping
};

ZetaTerms zeta_terms(const KPoint& k, Helicity xi, const PhotonPair& pair, const BandParams& p, const GapSpec& g,
                     const EmissionParams& e) noexcept;

/// Rate weight of the (k, xi) pair channel; zero on full gap nodes and never negative.
double zeta_weight(const KPoint& k, Helicity xi, const PhotonPair& pair, const BandParams& p, const GapSpec& g,
                   const EmissionParams& e) noexcept;

struct EmissionResult {
    TwoPhotonMatrix rho;
    /// rho / Tr rho; empty when the accumulated trace is zero.
    std::optional<TwoPhotonMatrix> rho_normalized;

    // Inputs echoed for serialization.
    PhotonPair pair{0.0, 0.0, 0.0};
    BandParams band;
    GapSpec gap;
    PolarizationAxis polarization;
    EmissionParams params;
    int grid_n = 0;
};

/// (1/2N) sum_{k,xi} zeta_{k,xi} M_{k,xi}.
EmissionResult two_photon_density_matrix(const PhotonPair& pair, const BandParams& p, const GapSpec& g,
                                         const PolarizationAxis& pol, const KGrid& grid, const EmissionParams& e);

}  // namespace pairlight
