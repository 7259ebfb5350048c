// pairlight: band structure, purity sweeps and two-photon density matrices
// for parity-mixed superconducting quantum wells.
//
// Exit codes: 0 success, 2 invalid input, 1 runtime failure.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairlight/config.hpp"
#include "pairlight/errors.hpp"
#include "pairlight/figures.hpp"
#include "pairlight/parallel.hpp"
#include "pairlight/sweep.hpp"
#include "pairlight/table.hpp"

namespace {

using namespace pairlight;

constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;

struct GlobalOptions {
    std::string config_path;
    std::string out;
    int grid = 0;
    unsigned threads = 0;
    std::vector<std::string> overrides;
    std::string format;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunConfig load_config(const GlobalOptions& opt) {
    const std::string text = opt.config_path.empty() ? std::string{} : read_file(opt.config_path);
    std::vector<std::string> overrides = opt.overrides;
    if (opt.grid != 0) overrides.push_back("grid=" + std::to_string(opt.grid));
    if (!opt.format.empty()) overrides.push_back("format=" + opt.format);
    if (!opt.out.empty()) overrides.push_back("output=" + opt.out);
    return parse_config(text, overrides);
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << text;
    if (!out) throw std::runtime_error("write to " + path + " failed");
}

void emit(const Table& table, const RunConfig& cfg) {
    write_output(cfg.format == OutputFormat::json ? to_json(table) : to_csv(table), cfg.output);
}

std::vector<double> parse_values(SweepAxis axis, const std::string& list) {
    const bool angle = axis == SweepAxis::theta || axis == SweepAxis::phi || axis == SweepAxis::theta_soc;
    std::vector<double> out;
    std::stringstream ss(list);
    for (std::string item; std::getline(ss, item, ',');) {
        out.push_back(parse_number("values", item, angle));
    }
    return out;
}

std::vector<double> parse_range(SweepAxis axis, const std::string& range) {
    const bool angle = axis == SweepAxis::theta || axis == SweepAxis::phi || axis == SweepAxis::theta_soc;
    std::vector<std::string> parts;
    std::stringstream ss(range);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw ValidationError("range", "expected start:stop:count");
    const double count = parse_number("range", parts[2]);
    if (count != static_cast<int>(count)) throw ValidationError("range", "count must be an integer");
    return linspace(parse_number("range", parts[0], angle), parse_number("range", parts[1], angle),
                    static_cast<int>(count));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Entangled photon pairs from Cooper-pair recombination in noncentrosymmetric quantum wells"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", "pairlight 0.1.0");

    GlobalOptions opt;
    app.add_option("--config", opt.config_path, "Flat key = value configuration file");
    app.add_option("--out", opt.out, "Output file (directory for 'figure'); stdout when omitted");
    app.add_option("--grid", opt.grid, "Points per Brillouin-zone axis (overrides config)");
    app.add_option("--threads", opt.threads, "Worker threads; affects speed only");
    app.add_option("--set", opt.overrides, "Override one config key, e.g. --set r=0.5")->take_all();
    app.add_option("--format", opt.format, "csv or json (overrides config)");

    auto* dos_cmd = app.add_subcommand("dos", "Gaussian-smeared density of states");
    auto* bands_cmd = app.add_subcommand("bands", "Helical bands along Gamma-K-M-Gamma");
    auto* fs_cmd = app.add_subcommand("fermi-surface", "Fermi contours of both helical bands");
    auto* mu_cmd = app.add_subcommand("solve-mu", "Chemical potential for a target filling");
    double target_filling = 0.0;
    mu_cmd->add_option("--filling", target_filling, "Target filling in (0, 2) (overrides config)");

    auto* sweep_cmd = app.add_subcommand("purity-sweep", "Purity (or density matrix for omega1) along one axis");
    std::string axis_name = "r";
    std::string values;
    std::string range;
    sweep_cmd->add_option("--axis", axis_name, "r, theta, phi, theta_soc, filling or omega1")->capture_default_str();
    auto* values_opt = sweep_cmd->add_option("--values", values, "Comma-separated axis values");
    sweep_cmd->add_option("--range", range, "start:stop:count (inclusive linspace)")->excludes(values_opt);

    auto* em_cmd = app.add_subcommand("emission-matrix", "Two-photon density matrix at one photon energy");

    auto* fig_cmd = app.add_subcommand("figure", "Write the data behind one figure as CSV files");
    std::string figure_id;
    fig_cmd->add_option("id", figure_id, "fig2a, fig2b, fig2cf, fig3, fig4, fig5, fig6, fig7 or fig8")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        set_worker_count(opt.threads);
        if (*mu_cmd && target_filling != 0.0) opt.overrides.push_back("filling=" + std::to_string(target_filling));
        if (*fig_cmd) {
            const FigureId id = parse_figure(figure_id);
            const std::string dir = opt.out.empty() ? "." : opt.out;
            opt.out.clear();
            const RunConfig cfg = load_config(opt);
            for (const auto& path : emit_figure_data(id, cfg, dir)) std::cerr << "wrote " << path.string() << '\n';
            return 0;
        }

        const RunConfig cfg = load_config(opt);
        if (*dos_cmd) {
            emit(dos_table(cfg), cfg);
        } else if (*bands_cmd) {
            emit(band_path_table(cfg), cfg);
        } else if (*fs_cmd) {
            emit(fermi_surface_table(cfg), cfg);
        } else if (*mu_cmd) {
            emit(solve_mu_table(cfg), cfg);
        } else if (*sweep_cmd) {
            const SweepAxis axis = parse_axis(axis_name);
            SweepSpec spec{axis, {}, cfg};
            if (!values.empty()) {
                spec.values = parse_values(axis, values);
            } else if (!range.empty()) {
                spec.values = parse_range(axis, range);
            } else {
                throw ValidationError("values", "give --values or --range");
            }
            emit(run_sweep(spec), cfg);
        } else if (*em_cmd) {
            const KGrid grid(cfg.grid_n);
            const auto result = two_photon_density_matrix(cfg.photon_pair(), cfg.resolved_band(grid), cfg.gap,
                                                          cfg.polarization(), grid, cfg.emission());
            write_output(cfg.format == OutputFormat::json ? to_json(result) : to_csv(emission_table(result)),
                         cfg.output);
        }
        return 0;
    } catch (const std::invalid_argument& e) {
        std::cerr << "pairlight: invalid input: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "pairlight: error: " << e.what() << '\n';
        return kExitRuntime;
    }
}
