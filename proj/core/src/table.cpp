#include "pairlight/table.hpp"

#include <fmt/format.h>

#include <cmath>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "pairlight/errors.hpp"

namespace pairlight {

std::size_t Table::column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return i;
    }
    throw ValidationError(std::string(name), "no such column");
}

std::string format_number(double x) {
    if (x == 0.0) return "0";  // folds -0
    return fmt::format("{:.17g}", x);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

nlohmann::ordered_json cell_json(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) {
        if (!std::isfinite(*d)) return nullptr;
        return *d;
    }
    return std::get<std::string>(c);
}

nlohmann::ordered_json matrix_json(const TwoPhotonMatrix& m) {
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < 4; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (std::size_t j = 0; j < 4; ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

void write_csv(std::ostream& out, const Table& table) {
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        out << (i ? "," : "") << csv_field(table.header[i]);
    }
    out << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out << ',';
            if (const auto* d = std::get_if<double>(&row[i])) {
                out << format_number(*d);
            } else {
                out << csv_field(std::get<std::string>(row[i]));
            }
        }
        out << '\n';
    }
}

std::string to_csv(const Table& table) {
    std::ostringstream os;
    write_csv(os, table);
    return os.str();
}

std::string to_json(const Table& table) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : table.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size() && i < table.header.size(); ++i) {
            obj[table.header[i]] = cell_json(row[i]);
        }
        rows.push_back(std::move(obj));
    }
    return rows.dump(2) + "\n";
}

const std::vector<std::string>& matrix_entry_labels() {
    static const std::vector<std::string> labels = [] {
        const char* basis[4] = {"LL", "LR", "RL", "RR"};
        std::vector<std::string> out;
        for (auto* a : basis) {
            for (auto* b : basis) out.push_back(std::string(a) + "_" + b);
        }
        return out;
    }();
    return labels;
}

Table emission_table(const EmissionResult& result) {
    Table t;
    t.header.push_back("matrix");
    for (const auto& l : matrix_entry_labels()) t.header.push_back(l);
    auto add = [&](const char* name, const TwoPhotonMatrix& m) {
        std::vector<Cell> row{std::string(name)};
        for (double x : m.m) row.emplace_back(x);
        t.rows.push_back(std::move(row));
    };
    add("raw", result.rho);
    if (result.rho_normalized) add("normalized", *result.rho_normalized);
    return t;
}

std::string to_json(const EmissionResult& result) {
    nlohmann::ordered_json j;
    j["basis"] = {"LL", "LR", "RL", "RR"};
    j["rho"] = matrix_json(result.rho);
    j["trace"] = result.rho.trace();
    j["rho_normalized"] = result.rho_normalized ? matrix_json(*result.rho_normalized) : nlohmann::ordered_json(nullptr);
    auto& p = j["parameters"];
    p["t"] = result.band.t;
    p["mu"] = result.band.mu;
    p["lambda"] = result.band.lambda;
    p["theta_soc"] = result.band.theta_soc;
    p["channel"] = std::string(to_string(result.gap.channel));
    p["r"] = result.gap.r;
    p["delta0"] = result.gap.delta0;
    p["theta_gap"] = result.gap.theta_gap;
    p["theta"] = result.polarization.theta();
    p["phi"] = result.polarization.phi();
    p["omega1"] = result.pair.omega1();
    p["omega2"] = result.pair.omega2();
    p["band_gap"] = result.pair.band_gap();
    p["temperature"] = result.params.temperature;
    p["sigma_delta"] = result.params.sigma_delta;
    p["b_matrix_element"] = result.params.b_matrix_element;
    p["grid"] = result.grid_n;
    return j.dump(2) + "\n";
}

}  // namespace pairlight
