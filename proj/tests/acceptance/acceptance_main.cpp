// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "oracles/purity_oracle.hpp"
#include "pairlight/band.hpp"
#include "pairlight/emission.hpp"
#include "pairlight/entanglement.hpp"
#include "pairlight/figures.hpp"
#include "pairlight/pairing.hpp"
#include "pairlight/sweep.hpp"

namespace {

using namespace pairlight;

constexpr double kGoldenZeta = 0.76436727593953675286;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::vector<PolarizationAxis> angle_mesh() {
    std::vector<PolarizationAxis> mesh;
    for (int i = 0; i < 13; ++i)
        for (int j = 0; j < 13; ++j) mesh.emplace_back(kPi * i / 12.0, kTwoPi * j / 13.0);
    return mesh;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Outcome pure_singlet_purity() {
    const auto start = std::chrono::steady_clock::now();
    const KGrid grid(128);
    const PurityEvaluator eval(grid, 0.0);
    double worst = 0.0;
    for (const auto& pol : angle_mesh()) worst = std::max(worst, std::abs(eval(SingletChannel::s, 1.0, 0.2, pol) - 2.0));
    const double elapsed = seconds_since(start);
    return {worst <= 1e-12 && elapsed < 5.0, fmt::format("max |gamma-2| = {:.3g}, {:.2f} s", worst, elapsed)};
}

Outcome singlet_flatness() {
    const KGrid grid(128);
    const PurityEvaluator eval(grid, 0.0);
    double worst = 0.0;
    for (SingletChannel c : kSingletChannels) {
        double lo = INFINITY, hi = -INFINITY;
        for (const auto& pol : angle_mesh()) {
            const double g = eval(c, 1.0, 0.2, pol);
            lo = std::min(lo, g);
            hi = std::max(hi, g);
        }
        worst = std::max(worst, hi - lo);
    }
    return {worst <= 1e-12, fmt::format("largest spread = {:.3g}", worst)};
}

Outcome channel_ordering() {
    const KGrid grid(256);
    const PurityEvaluator eval(grid, 0.0);
    const PolarizationAxis pol;
    const double s = eval(SingletChannel::s, 1.0, 0.2, pol);
    const double s_star = eval(SingletChannel::s_star, 1.0, 0.2, pol);
    const double dx2y2 = eval(SingletChannel::d_x2y2, 1.0, 0.2, pol);
    const double dxy = eval(SingletChannel::d_xy, 1.0, 0.2, pol);
    const double margin = std::min({s, s_star, dx2y2}) - dxy;
    return {s >= s_star && s >= dx2y2 && margin > 0.0,
            fmt::format("s={:.15g} s*={:.15g} dx2y2={:.15g} dxy={:.15g}", s, s_star, dx2y2, dxy)};
}

Outcome azimuthal_mirror() {
    const KGrid grid(128);
    const PurityEvaluator eval(grid, 0.0);
    double worst = 0.0;
    for (SingletChannel c : kSingletChannels)
        for (double r : {0.0, 0.25, 0.5, 0.75, 1.0})
            for (double phi : {0.0, kPi / 12, kPi / 6, kPi / 4})
                worst = std::max(worst, std::abs(eval(c, r, 0.2, {kPi / 2, phi}) - eval(c, r, 0.2, {kPi / 2, kPi / 2 - phi})));
    return {worst <= 1e-10, fmt::format("max mirror difference = {:.3g}", worst)};
}

Outcome singlet_maximizes_purity() {
    const KGrid grid(128);
    const PurityEvaluator eval(grid, 0.0);
    double worst = -INFINITY;
    for (SingletChannel c : kSingletChannels) {
        const double top = eval(c, 1.0, 0.2, {});
        for (double r : linspace(0.0, 1.0, 21)) worst = std::max(worst, eval(c, r, 0.2, {}) - top);
    }
    return {worst <= 0.0, fmt::format("max gamma(r) - gamma(1) = {:.3g}", worst)};
}

Outcome fraction_normalization() {
    const KGrid grid(256);
    double worst = 0.0;
    std::size_t checked = 0;
    for (SingletChannel c : kSingletChannels)
        for (double r : linspace(0.0, 1.0, 11)) {
            const GapSpec g{c, r, 0.2, 0.0};
            for (const KPoint& k : grid)
                for (Helicity xi : kHelicities) {
                    const auto f = pairing_fractions(k, xi, g);
                    if (!f.defined) continue;
                    worst = std::max(worst, std::abs(f.a * f.a + f.b * f.b - 1.0));
                    ++checked;
                }
        }
    return {worst <= 1e-12, fmt::format("max |a^2+b^2-1| = {:.3g} over {} points", worst, checked)};
}

Outcome selection_rules() {
    const KGrid grid(128);
    const BandParams band;
    const EmissionParams params;
    const PhotonPair pair = PhotonPair::from_omega1(0.0, 0.0);
    double singlet_worst = 0.0, triplet_worst = 0.0;
    bool all_normalized = true;
    for (SingletChannel c : kSingletChannels) {
        const auto singlet = two_photon_density_matrix(pair, band, {c, 1.0, 0.2, 0.0}, {kPi / 2, 0.0}, grid, params);
        const auto triplet = two_photon_density_matrix(pair, band, {c, 0.0, 0.2, 0.0}, {0.0, 0.0}, grid, params);
        if (!singlet.rho_normalized || !triplet.rho_normalized) {
            all_normalized = false;
            continue;
        }
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j : {LL, RR}) {
                singlet_worst = std::max({singlet_worst, std::abs((*singlet.rho_normalized)(i, j)),
                                          std::abs((*singlet.rho_normalized)(j, i))});
            }
        for (std::size_t i : {LR, RL})
            for (std::size_t j : {LR, RL}) triplet_worst = std::max(triplet_worst, std::abs((*triplet.rho_normalized)(i, j)));
    }
    return {all_normalized && singlet_worst < 1e-12 && triplet_worst < 1e-12,
            fmt::format("r=1 LL/RR weight = {:.3g}, r=0 theta=0 eta-block weight = {:.3g}", singlet_worst, triplet_worst)};
}

Outcome exchange_symmetry() {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const KGrid grid(128);
    int identical = 0;
    for (int draw = 0; draw < 5; ++draw) {
        const BandParams band{1.0, unit(rng) - 0.5, unit(rng), unit(rng) * kPi / 2};
        const GapSpec g{kSingletChannels[static_cast<std::size_t>(unit(rng) * 4) % 4], unit(rng), 0.1 + 0.2 * unit(rng), 0.0};
        const PolarizationAxis pol(unit(rng) * kPi, unit(rng) * 6.0);
        const EmissionParams params{0.005 + 0.05 * unit(rng), 0.05, 1.0};
        const PhotonPair pair = PhotonPair::from_omega1(unit(rng) - 0.5, 0.6 * unit(rng) - 0.3);
        const auto a = two_photon_density_matrix(pair, band, g, pol, grid, params);
        const auto b = two_photon_density_matrix(pair.swapped(), band, g, pol, grid, params);
        if (a.rho == b.rho && a.rho.trace() > 0.0) ++identical;
    }
    return {identical == 5, fmt::format("{}/5 draws bit-identical", identical)};
}

Outcome band_limits() {
    const KGrid grid(256);
    const double lambda = 0.5;
    double worst = 0.0;
    for (const KPoint& k : grid) {
        const double sx = std::sin(k.kx), sy = std::sin(k.ky);
        for (double theta : {0.0, kPi / 2}) {
            const BandParams p{1.0, 0.0, lambda, theta};
            worst = std::max(worst, std::abs(helical_dispersion(k, Helicity::plus, p) - kinetic_energy(k, p) -
                                             lambda * std::sqrt(sx * sx + sy * sy)));
        }
        const BandParams p{1.0, 0.0, lambda, kPi / 4};
        worst = std::max(worst, std::abs(helical_dispersion(k, Helicity::plus, p) - kinetic_energy(k, p) -
                                         lambda * std::abs(sx + sy)));
    }
    return {worst <= 1e-12, fmt::format("max deviation = {:.3g}", worst)};
}

Outcome particle_hole_anchor() {
    const KGrid grid(256);
    double worst_mu = 0.0, worst_integral = 0.0;
    for (double theta : {0.0, kPi / 4, kPi / 2}) {
        const BandParams p{1.0, 0.0, 0.5, theta};
        worst_mu = std::max(worst_mu, std::abs(solve_mu(1.0, p, grid, 0.01)));
        const DosCurve curve = dos(p, grid, dos_energy_mesh(p, grid, 0.02, 1024), 0.02);
        worst_integral = std::max(worst_integral, std::abs(curve.integral() - 2.0));
    }
    return {worst_mu < 1e-6 && worst_integral <= 2e-2,
            fmt::format("max |mu| = {:.3g}, max |dos integral - 2| = {:.3g}", worst_mu, worst_integral)};
}

Outcome oracle_equivalence() {
    std::mt19937_64 rng(8675309);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const KGrid grid(8);
    double worst = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        const SingletChannel c = kSingletChannels[static_cast<std::size_t>(unit(rng) * 4) % 4];
        const double r = unit(rng), theta = unit(rng) * kPi, phi = unit(rng) * 0.999 * kTwoPi;
        const double got = purity({c, r, 0.2, 0.0}, {theta, phi}, grid);
        const double want = oracle::purity(std::string(to_string(c)), r, 0.2, 0.0, theta, phi, 8);
        worst = std::max(worst, std::abs(got - want));
    }
    const KPoint k{kPi / 2, 0.0};
    const BandParams band{1.0, 0.0, 0.5, 0.0};
    const double eps = helical_dispersion(k, Helicity::plus, band);
    const double zeta = zeta_weight(k, Helicity::plus, PhotonPair::from_omega1(eps, eps), band,
                                    {SingletChannel::s, 1.0, 0.2, 0.0}, {0.01, 0.05, 1.0});
    const double rel = std::abs(zeta / kGoldenZeta - 1.0);
    return {worst <= 1e-12 && rel <= 1e-10,
            fmt::format("purity max |diff| = {:.3g}, zeta relative error = {:.3g}", worst, rel)};
}

Outcome performance() {
    RunConfig cfg;
    cfg.grid_n = 256;
    auto start = std::chrono::steady_clock::now();
    const Table sweep = run_sweep(SweepSpec::from_range(SweepAxis::r, 0.0, 1.0, 101, cfg));
    const double sweep_time = seconds_since(start);

    cfg.grid_n = 128;
    const auto dir = std::filesystem::temp_directory_path() / "pairlight_acceptance_fig8";
    start = std::chrono::steady_clock::now();
    const auto files = emit_figure_data(FigureId::fig8, cfg, dir);
    const double fig8_time = seconds_since(start);
    std::filesystem::remove_all(dir);
    return {sweep.rows.size() == 101 && files.size() == 1 && sweep_time < 10.0 && fig8_time < 60.0,
            fmt::format("r-sweep 256^2 {:.2f} s, fig8 128^2 {:.2f} s", sweep_time, fig8_time)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"pure-singlet purity", pure_singlet_purity},
        {"singlet flatness", singlet_flatness},
        {"channel ordering", channel_ordering},
        {"azimuthal mirror symmetry", azimuthal_mirror},
        {"r=1 maximizes purity", singlet_maximizes_purity},
        {"fraction normalization", fraction_normalization},
        {"density-matrix selection rule", selection_rules},
        {"zeta exchange symmetry", exchange_symmetry},
        {"band-structure limits", band_limits},
        {"particle-hole anchor", particle_hole_anchor},
        {"oracle equivalence", oracle_equivalence},
        {"performance", performance},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome outcome;
        try {
            outcome = criteria[i].second();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        if (!outcome.pass) ++failures;
        std::printf("%-4s criterion %2zu  %-30s %s\n", outcome.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    outcome.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu/%zu criteria passed\n", criteria.size() - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
