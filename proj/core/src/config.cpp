#include "pairlight/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <string>

#include "pairlight/errors.hpp"

namespace pairlight {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::string unquote(std::string_view v) {
    if (v.size() >= 2 && (v.front() == '"' || v.front() == '\'') && v.back() == v.front()) {
        return std::string(v.substr(1, v.size() - 2));
    }
    return std::string(v);
}

bool parse_plain(std::string_view text, double& out) {
    if (text.empty()) return false;
    if (text.front() == '+') text.remove_prefix(1);
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, out);
    return ec == std::errc{} && ptr == end && std::isfinite(out);
}

int parse_int(std::string_view key, std::string_view text) {
    const double v = parse_number(key, text);
    if (v != std::floor(v) || std::abs(v) > 1e9) throw ValidationError(std::string(key), "expected an integer");
    return static_cast<int>(v);
}

}  // namespace

double parse_number(std::string_view key, std::string_view text, bool angle) {
    text = trim(text);
    double value = 0.0;
    if (parse_plain(text, value)) return value;
    if (angle) {
        // [coef][*]pi[/den]
        const auto pos = text.find("pi");
        if (pos != std::string_view::npos) {
            std::string_view coef = trim(text.substr(0, pos));
            std::string_view rest = trim(text.substr(pos + 2));
            if (!coef.empty() && coef.back() == '*') coef = trim(coef.substr(0, coef.size() - 1));
            double c = 1.0;
            double den = 1.0;
            bool ok = true;
            if (coef == "-") {
                c = -1.0;
            } else if (!coef.empty()) {
                ok = parse_plain(coef, c);
            }
            if (ok && !rest.empty()) {
                ok = rest.front() == '/' && parse_plain(trim(rest.substr(1)), den) && den != 0.0;
            }
            if (ok) return c * kPi / den;
        }
    }
    throw ValidationError(std::string(key), "cannot parse '" + std::string(text) + "' as a number");
}

const std::vector<std::string_view>& config_keys() {
    static const std::vector<std::string_view> keys{
        "t",           "mu",          "lambda",     "theta_soc",   "filling",  "channel",
        "r",           "delta0",      "theta_gap",  "theta",       "phi",      "grid",
        "temperature", "sigma_E",     "energy_points", "path_samples", "sigma_delta", "band_gap",
        "omega1",      "b_matrix_element", "output", "format",
    };
    return keys;
}

void RunConfig::validate() const {
    band.validate();
    gap.validate();
    if (mu_set && filling_target) throw ValidationError("filling", "mu and filling are mutually exclusive");
    if (filling_target && !(*filling_target > 0.0 && *filling_target < 2.0)) {
        throw ValidationError("filling", "target filling must lie in (0, 2)");
    }
    (void)polarization();
    if (grid_n < 2) throw ValidationError("grid", "need at least 2 points per axis");
    if (!(temperature > 0.0)) throw ValidationError("temperature", "must be positive");
    if (!(sigma_e > 0.0)) throw ValidationError("sigma_E", "must be positive");
    if (energy_points < 2) throw ValidationError("energy_points", "need at least 2 points");
    if (path_samples < 2) throw ValidationError("path_samples", "need at least 2 samples per leg");
    if (!(sigma_delta > 0.0)) throw ValidationError("sigma_delta", "must be positive");
    if (!std::isfinite(band_gap)) throw ValidationError("band_gap", "must be finite");
    if (omega1 && !std::isfinite(*omega1)) throw ValidationError("omega1", "must be finite");
    if (!std::isfinite(b_matrix_element)) throw ValidationError("b_matrix_element", "must be finite");
}

BandParams RunConfig::resolved_band(const KGrid& grid) const {
    BandParams p = band;
    if (filling_target) p.mu = solve_mu(*filling_target, band, grid, temperature);
    return p;
}

RunConfig parse_config(std::string_view text) {
    RunConfig cfg;
    std::set<std::string, std::less<>> seen;
    const auto& keys = config_keys();

    std::size_t line_no = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ValidationError("line " + std::to_string(line_no), "expected 'key = value'");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
            throw ValidationError(key, "unknown key");
        }
        if (!seen.insert(key).second) throw ValidationError(key, "key given more than once");
        if (value.empty()) throw ValidationError(key, "missing value");

        if (key == "t") cfg.band.t = parse_number(key, value);
        else if (key == "mu") { cfg.band.mu = parse_number(key, value); cfg.mu_set = true; }
        else if (key == "lambda") cfg.band.lambda = parse_number(key, value);
        else if (key == "theta_soc") cfg.band.theta_soc = parse_number(key, value, true);
        else if (key == "filling") cfg.filling_target = parse_number(key, value);
        else if (key == "channel") cfg.gap.channel = parse_channel(unquote(value));
        else if (key == "r") cfg.gap.r = parse_number(key, value);
        else if (key == "delta0") cfg.gap.delta0 = parse_number(key, value);
        else if (key == "theta_gap") cfg.gap.theta_gap = parse_number(key, value, true);
        else if (key == "theta") cfg.theta = parse_number(key, value, true);
        else if (key == "phi") cfg.phi = parse_number(key, value, true);
        else if (key == "grid") cfg.grid_n = parse_int(key, value);
        else if (key == "temperature") cfg.temperature = parse_number(key, value);
        else if (key == "sigma_E") cfg.sigma_e = parse_number(key, value);
        else if (key == "energy_points") cfg.energy_points = parse_int(key, value);
        else if (key == "path_samples") cfg.path_samples = parse_int(key, value);
        else if (key == "sigma_delta") cfg.sigma_delta = parse_number(key, value);
        else if (key == "band_gap") cfg.band_gap = parse_number(key, value);
        else if (key == "omega1") cfg.omega1 = parse_number(key, value);
        else if (key == "b_matrix_element") cfg.b_matrix_element = parse_number(key, value);
        else if (key == "output") cfg.output = unquote(value);
        else if (key == "format") {
            const std::string f = unquote(value);
            if (f == "csv") cfg.format = OutputFormat::csv;
            else if (f == "json") cfg.format = OutputFormat::json;
            else throw ValidationError(key, "expected csv or json, got '" + f + "'");
        }
    }
    cfg.validate();
    return cfg;
}

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
    std::set<std::string, std::less<>> replaced;
    std::string extra;
    for (const auto& o : overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos) throw ValidationError(o, "override must look like key=value");
        const std::string key(trim(std::string_view(o).substr(0, eq)));
        if (!replaced.insert(key).second) throw ValidationError(key, "key overridden more than once");
        extra += o + "\n";
    }
    std::string merged;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        const std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        const auto eq = line.find('=');
        const auto hash = line.find('#');
        const bool assignment = eq != std::string_view::npos && (hash == std::string_view::npos || eq < hash);
        if (assignment && replaced.count(trim(line.substr(0, eq)))) {
            merged += "\n";  // keep line numbers stable
            continue;
        }
        merged.append(line);
        merged += "\n";
    }
    return parse_config(merged + extra);
}

}  // namespace pairlight
