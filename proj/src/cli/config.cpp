#include "thermo/cli/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "thermo/errors.hpp"

namespace thermo::cli {

namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& v, const std::string& key) {
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, out);
    if (res.ec != std::errc() || res.ptr != end) throw ConfigError("'" + key + "': not a number: '" + v + "'");
    return out;
}

int parse_count(const std::string& v, const std::string& key) {
    const double d = parse_number(v, key);
    if (d != std::floor(d) || d > 1e7) throw ConfigError("'" + key + "' must be an integer");
    return static_cast<int>(d);
}

bool parse_scale(const std::string& v) {
    if (v == "log") return true;
    if (v == "lin") return false;
    throw ConfigError("scale must be lin or log, got '" + v + "'");
}

void set_axis(std::optional<SweepAxis>& axis, const std::string& key, const std::string& value) {
    if (!axis) axis.emplace();
    if (key == "variable") axis->variable = value;
    else if (key == "min") axis->min = parse_number(value, key);
    else if (key == "max") axis->max = parse_number(value, key);
    else if (key == "count") axis->count = parse_count(value, key);
    else if (key == "scale") axis->log = parse_scale(value);
    else throw ConfigError("unknown sweep key '" + key + "'");
}

}  // namespace

std::string_view mode_name(Mode m) {
    switch (m) {
        case Mode::Ies: return "ies";
        case Mode::Ics: return "ics";
        case Mode::Bounds: return "bounds";
        case Mode::Bath: return "bath";
    }
    return "ies";
}

Mode parse_mode(std::string_view s) {
    for (Mode m : {Mode::Ies, Mode::Ics, Mode::Bounds, Mode::Bath})
        if (mode_name(m) == s) return m;
    throw ConfigError("unknown mode '" + std::string(s) + "'");
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig cfg) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::string section = "general";
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        const auto s = trim(line);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']') throw ConfigError("line " + std::to_string(lineno) + ": unterminated section");
            section = trim(std::string_view(s).substr(1, s.size() - 2));
            if (section != "general" && section != "params" && section != "sweep" && section != "sweep2" &&
                section != "output")
                throw ConfigError("line " + std::to_string(lineno) + ": unknown section [" + section + "]");
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        const auto key = trim(std::string_view(s).substr(0, eq));
        const auto value = trim(std::string_view(s).substr(eq + 1));
        if (key.empty()) throw ConfigError("line " + std::to_string(lineno) + ": empty key");

        try {
            if (section == "general") {
                if (key == "mode") cfg.mode = parse_mode(value);
                else if (key == "formula") cfg.formula = value;
                else if (key == "preset") {
                    if (value != "fig2") throw ConfigError("unknown preset '" + value + "'");
                    cfg.fig2 = true;
                } else throw ConfigError("unknown key '" + key + "'");
            } else if (section == "params") {
                set_param(cfg.params, key, parse_number(value, key));
                cfg.explicit_params.insert(key);
            } else if (section == "sweep") {
                set_axis(cfg.sweep, key, value);
            } else if (section == "sweep2") {
                set_axis(cfg.sweep2, key, value);
            } else if (section == "output") {
                if (key == "path") cfg.out_path = value;
                else if (key == "format") cfg.format = value;
                else if (key == "svg") cfg.svg_path = value;
                else throw ConfigError("unknown output key '" + key + "'");
            } else {
                throw ConfigError("unknown section [" + section + "]");
            }
        } catch (const DomainError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const ConfigError& e) {
            throw ConfigError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return cfg;
}

ScenarioConfig load_config_file(const std::string& path, ScenarioConfig base) {
    std::ifstream f(path);
    if (!f) throw ConfigError("cannot read config '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_config(ss.str(), std::move(base));
}

void check_config(const ScenarioConfig& cfg) {
    if (cfg.format != "csv" && cfg.format != "json") throw ConfigError("format must be csv or json");
    const auto& names = param_names();
    for (const auto* axis : {&cfg.sweep, &cfg.sweep2}) {
        if (!*axis) continue;
        const auto& a = **axis;
        if (std::find(names.begin(), names.end(), a.variable) == names.end())
            throw ConfigError("sweep variable '" + a.variable + "' is not a parameter");
        if (a.count < 2) throw ConfigError("sweep count must be at least 2");
        if (!std::isfinite(a.min) || !std::isfinite(a.max)) throw ConfigError("sweep bounds must be finite");
        if (a.log && !(a.min > 0.0 && a.max > 0.0)) throw ConfigError("log sweeps need positive bounds");
    }
    if (cfg.sweep2 && !cfg.sweep) throw ConfigError("[sweep2] needs a [sweep]");
    if (cfg.sweep && cfg.sweep2 && cfg.sweep->variable == cfg.sweep2->variable)
        throw ConfigError("the two sweep variables must differ");

    static const std::set<std::string> ies_formulas{"full", "steady", "steady_simplified", "short_time",
                                                    "short_time_simplified"};
    static const std::set<std::string> bath_formulas{"full", "weak", "strong"};
    const bool ok = cfg.mode == Mode::Ies    ? ies_formulas.contains(cfg.formula)
                    : cfg.mode == Mode::Bath ? bath_formulas.contains(cfg.formula)
                                             : cfg.formula == "full";
    if (!ok) throw ConfigError("formula '" + cfg.formula + "' not available in mode " + std::string(mode_name(cfg.mode)));
    if (cfg.fig2 && cfg.mode != Mode::Bath) throw ConfigError("the fig2 preset belongs to bath mode");

    try {
        cfg.params.validate();
    } catch (const DomainError& e) {
        throw ConfigError(e.what());
    }
}

std::vector<double> axis_values(const SweepAxis& a) {
    std::vector<double> v;
    for (int i = 0; i < a.count; ++i) {
        const double t = static_cast<double>(i) / (a.count - 1);
        double x = a.log ? std::exp(std::log(a.min) + t * (std::log(a.max) - std::log(a.min)))
                         : a.min + t * (a.max - a.min);
        if (i == 0) x = a.min;
        if (i == a.count - 1) x = a.max;
        if (a.variable == "n_qubits") {
            x = std::round(x);
            if (!v.empty() && v.back() == x) continue;
        }
        v.push_back(x);
    }
    return v;
}

}  // namespace thermo::cli
