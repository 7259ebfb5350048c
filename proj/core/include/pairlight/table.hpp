#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "pairlight/emission.hpp"

namespace pairlight {

using Cell = std::variant<double, std::string>;

/// Column-labelled result table; every writer emits the header.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<Cell>> rows;

    std::size_t column(std::string_view name) const;
    double number(std::size_t row, std::size_t col) const { return std::get<double>(rows[row][col]); }
};

/// Shortest-independent fixed formatting: 17 significant digits.
std::string format_number(double x);

void write_csv(std::ostream& out, const Table& table);
std::string to_csv(const Table& table);
/// Array of row objects keyed by header.
std::string to_json(const Table& table);

/// Labels of the 16 matrix entries, row-major: "LL_LL", "LL_LR", ...
const std::vector<std::string>& matrix_entry_labels();

/// One row per matrix ("raw", then "normalized" when present), 16 entries each.
Table emission_table(const EmissionResult& result);
/// Raw and normalized matrices plus every input parameter.
std::string to_json(const EmissionResult& result);

}  // namespace pairlight
