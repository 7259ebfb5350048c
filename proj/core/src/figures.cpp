#include "pairlight/figures.hpp"

#include <cerrno>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <utility>

#include "pairlight/errors.hpp"

namespace pairlight {

Table band_path_table(const RunConfig& cfg) {
    cfg.validate();
    BandParams band = cfg.band;
    if (cfg.filling_target) band = cfg.resolved_band(KGrid(cfg.grid_n));
    const SymmetryPath path = high_symmetry_path(cfg.path_samples);
    Table t{{"path_coordinate", "kx", "ky", "eps_plus", "eps_minus"}, {}};
    for (std::size_t i = 0; i < path.points.size(); ++i) {
        const KPoint& k = path.points[i];
        t.rows.push_back({path.distance[i], k.kx, k.ky, helical_dispersion(k, Helicity::plus, band),
                          helical_dispersion(k, Helicity::minus, band)});
    }
    return t;
}

Table dos_table(const RunConfig& cfg) {
    cfg.validate();
    const KGrid grid(cfg.grid_n);
    const BandParams band = cfg.resolved_band(grid);
    const auto mesh = dos_energy_mesh(band, grid, cfg.sigma_e, cfg.energy_points);
    const DosCurve curve = dos(band, grid, mesh, cfg.sigma_e);
    Table t{{"E", "dos"}, {}};
    for (std::size_t i = 0; i < curve.energies.size(); ++i) t.rows.push_back({curve.energies[i], curve.density[i]});
    return t;
}

Table fermi_surface_table(const RunConfig& cfg) {
    cfg.validate();
    const KGrid grid(cfg.grid_n);
    const BandParams band = cfg.resolved_band(grid);
    Table t{{"contour_id", "kx", "ky", "xi"}, {}};
    double id = 0.0;
    for (Helicity xi : kHelicities) {
        const FermiSurface fs = fermi_surface(band, grid, xi);
        for (const auto& line : fs.contours) {
            for (const auto& v : line.vertices) t.rows.push_back({id, v.kx, v.ky, sign(xi)});
            if (line.closed && !line.vertices.empty()) {
                t.rows.push_back({id, line.vertices.front().kx, line.vertices.front().ky, sign(xi)});
            }
            id += 1.0;
        }
    }
    return t;
}

Table solve_mu_table(const RunConfig& cfg) {
    cfg.validate();
    if (!cfg.filling_target) throw ValidationError("filling", "solve-mu needs a target filling");
    const KGrid grid(cfg.grid_n);
    BandParams band = cfg.resolved_band(grid);
    return Table{{"filling", "mu", "achieved_filling"},
                 {{*cfg.filling_target, band.mu, filling(band, grid, cfg.temperature)}}};
}

Table channel_purity_table(const RunConfig& base, SweepAxis axis, const std::vector<double>& values) {
    base.validate();
    if (axis == SweepAxis::omega1) throw ValidationError("axis", "omega1 does not change the purity");
    for (double v : values) validate_axis_value(axis, v);

    const KGrid grid(base.grid_n);
    const PurityEvaluator evaluate(grid, base.gap.theta_gap);
    Table t;
    t.header.emplace_back(to_string(axis));
    for (SingletChannel c : kSingletChannels) t.header.emplace_back(to_string(c));
    for (double v : values) {
        RunConfig cfg = base;
        if (axis == SweepAxis::r) cfg.gap.r = v;
        if (axis == SweepAxis::theta) cfg.theta = v;
        if (axis == SweepAxis::phi) cfg.phi = v;
        if (axis == SweepAxis::theta_soc) cfg.band.theta_soc = v;
        const PolarizationAxis pol = cfg.polarization();
        std::vector<Cell> row{v};
        for (SingletChannel c : kSingletChannels) row.emplace_back(evaluate(c, cfg.gap.r, cfg.gap.delta0, pol));
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::string_view to_string(FigureId id) noexcept {
    switch (id) {
        case FigureId::fig2a: return "fig2a";
        case FigureId::fig2b: return "fig2b";
        case FigureId::fig2cf: return "fig2cf";
        case FigureId::fig3: return "fig3";
        case FigureId::fig4: return "fig4";
        case FigureId::fig5: return "fig5";
        case FigureId::fig6: return "fig6";
        case FigureId::fig7: return "fig7";
        case FigureId::fig8: return "fig8";
    }
    return "?";
}

FigureId parse_figure(std::string_view name) {
    for (FigureId id : {FigureId::fig2a, FigureId::fig2b, FigureId::fig2cf, FigureId::fig3, FigureId::fig4,
                        FigureId::fig5, FigureId::fig6, FigureId::fig7, FigureId::fig8}) {
        if (name == to_string(id)) return id;
    }
    throw ValidationError("figure", "unknown figure '" + std::string(name) + "'");
}

namespace {

struct Labeled {
    const char* label;
    double value;
};

// Fixed curve parameters; labels become part of file names.
constexpr Labeled kPolarAngles[] = {{"0", 0.0}, {"pi_6", kPi / 6}, {"pi_4", kPi / 4}, {"pi_3", kPi / 3}, {"pi_2", kPi / 2}};
constexpr Labeled kRatios[] = {{"0", 0.0}, {"0.25", 0.25}, {"0.5", 0.5}, {"0.75", 0.75}, {"1", 1.0}};

void write_table(const Table& table, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing: " + std::strerror(errno));
    write_csv(out, table);
    out.flush();
    if (!out) throw std::runtime_error("write to " + path.string() + " failed");
}

Table fig8_table(const RunConfig& cfg) {
    RunConfig base = cfg;
    base.theta = kPi / 2;
    base.phi = 0.0;
    const KGrid grid(base.grid_n);
    const BandParams band = base.resolved_band(grid);

    Table t;
    t.header = {"channel", "r", "normalized"};
    for (const auto& l : matrix_entry_labels()) t.header.push_back("rho_" + l);
    for (SingletChannel c : kSingletChannels) {
        for (double r : {1.0, 0.5, 0.0}) {
            GapSpec gap = base.gap;
            gap.channel = c;
            gap.r = r;
            const auto res =
                two_photon_density_matrix(base.photon_pair(), band, gap, base.polarization(), grid, base.emission());
            std::vector<Cell> row{std::string(to_string(c)), r, res.rho_normalized ? 1.0 : 0.0};
            const TwoPhotonMatrix m = res.rho_normalized.value_or(TwoPhotonMatrix{});
            for (double x : m.m) row.emplace_back(x);
            t.rows.push_back(std::move(row));
        }
    }
    return t;
}

}  // namespace

std::vector<std::filesystem::path> emit_figure_data(FigureId id, const RunConfig& cfg,
                                                    const std::filesystem::path& out_dir) {
    cfg.validate();
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("cannot create " + out_dir.string() + ": " + ec.message());

    std::vector<std::filesystem::path> written;
    auto emit = [&](const Table& table, const std::string& stem) {
        const auto path = out_dir / (stem + ".csv");
        write_table(table, path);
        written.push_back(path);
    };
    const std::string name(to_string(id));
    const auto r_mesh = linspace(0.0, 1.0, 101);

    switch (id) {
        case FigureId::fig2a: emit(band_path_table(cfg), name); break;
        case FigureId::fig2b: emit(dos_table(cfg), name); break;
        case FigureId::fig2cf: emit(fermi_surface_table(cfg), name); break;
        case FigureId::fig3: {
            RunConfig base = cfg;
            base.theta = 0.0;
            emit(channel_purity_table(base, SweepAxis::r, r_mesh), name);
            break;
        }
        case FigureId::fig4:
            for (const auto& th : kPolarAngles) {
                RunConfig base = cfg;
                base.theta = th.value;
                base.phi = 0.0;
                emit(channel_purity_table(base, SweepAxis::r, r_mesh), name + "_theta_" + th.label);
            }
            break;
        case FigureId::fig5:
            for (const auto& ph : kPolarAngles) {
                RunConfig base = cfg;
                base.theta = kPi / 2;
                base.phi = ph.value;
                emit(channel_purity_table(base, SweepAxis::r, r_mesh), name + "_phi_" + ph.label);
            }
            break;
        case FigureId::fig6:
            for (const auto& r : kRatios) {
                RunConfig base = cfg;
                base.gap.r = r.value;
                base.phi = 0.0;
                emit(channel_purity_table(base, SweepAxis::theta, linspace(0.0, kPi, 91)), name + "_r_" + r.label);
            }
            break;
        case FigureId::fig7:
            for (const auto& r : kRatios) {
                RunConfig base = cfg;
                base.gap.r = r.value;
                base.theta = kPi / 2;
                emit(channel_purity_table(base, SweepAxis::phi, linspace(0.0, kPi, 91)), name + "_r_" + r.label);
            }
            break;
        case FigureId::fig8: emit(fig8_table(cfg), name); break;
    }
    return written;
}

}  // namespace pairlight
