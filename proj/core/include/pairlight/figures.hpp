#pragma once

#include <filesystem>
#include <string_view>
#include <vector>

#include "pairlight/config.hpp"
#include "pairlight/sweep.hpp"
#include "pairlight/table.hpp"

namespace pairlight {

/// Helical bands along Gamma-K-M-Gamma: (path_coordinate, kx, ky, eps_plus, eps_minus).
Table band_path_table(const RunConfig& cfg);

/// (E, dos) on the config's grid and smearing.
Table dos_table(const RunConfig& cfg);

/// Fermi contours of both helicities: (contour_id, kx, ky, xi). Closed
/// contours repeat their first vertex at the end.
Table fermi_surface_table(const RunConfig& cfg);

/// (filling, mu, achieved_filling); requires cfg.filling_target.
Table solve_mu_table(const RunConfig& cfg);

/// Purity of all four singlet channels along one axis:
/// (axis, s, s-star, dx2y2, dxy).
Table channel_purity_table(const RunConfig& base, SweepAxis axis, const std::vector<double>& values);

enum class FigureId { fig2a, fig2b, fig2cf, fig3, fig4, fig5, fig6, fig7, fig8 };

std::string_view to_string(FigureId id) noexcept;
FigureId parse_figure(std::string_view name);

/// Writes the CSV files behind one figure into `out_dir` (created if
/// missing) and returns their paths. Single-table figures write
/// `<id>.csv`; figures with one curve family per fixed parameter write
/// `<id>_<param>_<value>.csv`.
std::vector<std::filesystem::path> emit_figure_data(FigureId id, const RunConfig& cfg,
                                                    const std::filesystem::path& out_dir);

}  // namespace pairlight
