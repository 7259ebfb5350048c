#pragma once

#include <string_view>
#include <vector>

#include "pairlight/config.hpp"
#include "pairlight/table.hpp"

namespace pairlight {

enum class SweepAxis { r, theta, phi, theta_soc, filling, omega1 };

std::string_view to_string(SweepAxis axis) noexcept;
SweepAxis parse_axis(std::string_view name);

/// Evenly spaced values including both ends; count >= 2.
std::vector<double> linspace(double start, double stop, int count);

struct SweepSpec {
    SweepAxis axis = SweepAxis::r;
    std::vector<double> values;
    RunConfig base;

    static SweepSpec from_range(SweepAxis axis, double start, double stop, int count, RunConfig base);
};

/// Throws ValidationError (named after the axis) when a value is outside the
/// axis's legal range.
void validate_axis_value(SweepAxis axis, double value);

/// One row per axis value in ascending order, everything else held at
/// `spec.base`. Purity axes give columns (axis, gamma); the omega1 axis
/// gives (omega1, trace, 16 raw density-matrix entries).
Table run_sweep(const SweepSpec& spec);

}  // namespace pairlight
