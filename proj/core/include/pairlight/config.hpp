#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pairlight/band.hpp"
#include "pairlight/emission.hpp"
#include "pairlight/entanglement.hpp"
#include "pairlight/pairing.hpp"

namespace pairlight {

enum class OutputFormat { csv, json };

/// Every knob of a run. Defaults live here and nowhere else.
struct RunConfig {
    BandParams band;                     ///< t=1, mu=0, lambda=0.5, theta_soc=0
    bool mu_set = false;                 ///< mu given explicitly
    std::optional<double> filling_target;  ///< overrides mu through solve_mu

    GapSpec gap;                         ///< s, r=1, delta0=0.2, theta_gap=0
    double theta = 0.0;
    double phi = 0.0;

    int grid_n = 256;
    double temperature = 0.01;
    double sigma_e = 0.02;
    int energy_points = 1024;
    int path_samples = 100;

    double sigma_delta = 0.05;
    double band_gap = 0.0;
    std::optional<double> omega1;        ///< defaults to band_gap (omega1 = omega2)
    double b_matrix_element = 1.0;

    std::string output;
    OutputFormat format = OutputFormat::csv;

    /// Throws ValidationError naming the first offending field.
    void validate() const;

    PolarizationAxis polarization() const { return {theta, phi}; }
    EmissionParams emission() const { return {temperature, sigma_delta, b_matrix_element}; }
    PhotonPair photon_pair() const { return PhotonPair::from_omega1(omega1.value_or(band_gap), band_gap); }

    /// Band parameters with mu fixed by the filling target when one is set.
    BandParams resolved_band(const KGrid& grid) const;
};

/// Keys accepted by parse_config, in documentation order.
const std::vector<std::string_view>& config_keys();

/// Parses a flat `key = value` document (one pair per line, `#` starts a
/// comment). Angles accept plain radians or multiples of pi such as `pi/4`,
/// `3pi/4`, `0.5pi`. Unknown or repeated keys, bad numbers, out-of-range
/// values and setting both `mu` and `filling` raise ValidationError.
RunConfig parse_config(std::string_view text);

/// As above, with `key=value` overrides that replace the document's value
/// for the same key.
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides);

/// Parses one numeric value; `angle` enables the pi forms.
double parse_number(std::string_view key, std::string_view text, bool angle = false);

}  // namespace pairlight
