#include "pairlight/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pairlight/errors.hpp"

namespace pairlight {

std::string_view to_string(SweepAxis axis) noexcept {
    switch (axis) {
        case SweepAxis::r: return "r";
        case SweepAxis::theta: return "theta";
        case SweepAxis::phi: return "phi";
        case SweepAxis::theta_soc: return "theta_soc";
        case SweepAxis::filling: return "filling";
        case SweepAxis::omega1: return "omega1";
    }
    return "?";
}

SweepAxis parse_axis(std::string_view name) {
    for (SweepAxis a : {SweepAxis::r, SweepAxis::theta, SweepAxis::phi, SweepAxis::theta_soc, SweepAxis::filling,
                        SweepAxis::omega1}) {
        if (name == to_string(a)) return a;
    }
    throw ValidationError("axis", "unknown sweep axis '" + std::string(name) +
                                      "' (expected r, theta, phi, theta_soc, filling or omega1)");
}

std::vector<double> linspace(double start, double stop, int count) {
    if (count < 2) throw ValidationError("count", "linspace needs at least 2 points");
    std::vector<double> v(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        v[static_cast<std::size_t>(i)] = start + (stop - start) * static_cast<double>(i) / (count - 1);
    }
    v.back() = stop;
    return v;
}

SweepSpec SweepSpec::from_range(SweepAxis axis, double start, double stop, int count, RunConfig base) {
    return SweepSpec{axis, linspace(start, stop, count), std::move(base)};
}

void validate_axis_value(SweepAxis axis, double v) {
    bool ok = std::isfinite(v);
    switch (axis) {
        case SweepAxis::r: ok = ok && v >= 0.0 && v <= 1.0; break;
        case SweepAxis::theta: ok = ok && v >= 0.0 && v <= kPi; break;
        case SweepAxis::phi: ok = ok && v >= 0.0 && v < kTwoPi; break;
        case SweepAxis::theta_soc: ok = ok && v >= 0.0 && v <= kPi / 2; break;
        case SweepAxis::filling: ok = ok && v > 0.0 && v < 2.0; break;
        case SweepAxis::omega1: break;
    }
    if (!ok) {
        throw ValidationError(std::string(to_string(axis)), "sweep value " + format_number(v) + " out of range");
    }
}

Table run_sweep(const SweepSpec& spec) {
    spec.base.validate();
    if (spec.values.empty()) throw ValidationError("values", "sweep needs at least one value");
    std::vector<double> values = spec.values;
    for (double v : values) validate_axis_value(spec.axis, v);
    std::sort(values.begin(), values.end());

    const KGrid grid(spec.base.grid_n);
    Table table;
    table.header.emplace_back(to_string(spec.axis));

    if (spec.axis == SweepAxis::omega1) {
        table.header.emplace_back("trace");
        for (const auto& l : matrix_entry_labels()) table.header.push_back("rho_" + l);
        const BandParams band = spec.base.resolved_band(grid);
        for (double w : values) {
            const auto result = two_photon_density_matrix(PhotonPair::from_omega1(w, spec.base.band_gap), band,
                                                          spec.base.gap, spec.base.polarization(), grid,
                                                          spec.base.emission());
            std::vector<Cell> row{w, result.rho.trace()};
            for (double x : result.rho.m) row.emplace_back(x);
            table.rows.push_back(std::move(row));
        }
        return table;
    }

    // Purity depends on the gap and the polarization axis only; theta_soc
    // and filling move the band, which is held fixed here.
    table.header.emplace_back("gamma");
    const PurityEvaluator evaluate(grid, spec.base.gap.theta_gap);
    for (double v : values) {
        RunConfig cfg = spec.base;
        switch (spec.axis) {
            case SweepAxis::r: cfg.gap.r = v; break;
            case SweepAxis::theta: cfg.theta = v; break;
            case SweepAxis::phi: cfg.phi = v; break;
            case SweepAxis::theta_soc: cfg.band.theta_soc = v; break;
            case SweepAxis::filling:
                cfg.filling_target = v;
                cfg.mu_set = false;
                break;
            case SweepAxis::omega1: break;
        }
        cfg.validate();
        table.rows.push_back({v, evaluate(cfg.gap, cfg.polarization())});
    }
    return table;
}

}  // namespace pairlight
