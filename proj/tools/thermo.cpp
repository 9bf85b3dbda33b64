#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "thermo/cli/config.hpp"
#include "thermo/cli/output.hpp"
#include "thermo/cli/sweep.hpp"
#include "thermo/cli/validate.hpp"
#include "thermo/model.hpp"

using namespace thermo;
using namespace thermo::cli;

namespace {

std::string flag_for(const std::string& name) {
    if (name == "Phi") return "--Phi";
    std::string f = "--";
    for (char c : name) f += c == '_' ? '-' : static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return f;
}

struct AxisFlags {
    std::string variable;
    double min = 0, max = 0;
    int count = 2;
    std::string scale = "lin";
};

int write_output(const ScenarioConfig& cfg, const SweepTable& table) {
    std::ostringstream body;
    if (cfg.format == "json") write_json(body, table);
    else write_csv(body, table);

    if (cfg.out_path.empty()) {
        std::cout << body.str();
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write '" << cfg.out_path << "'\n";
            return 2;
        }
        f << body.str();
    }
    if (!cfg.svg_path.empty()) {
        std::ofstream f(cfg.svg_path, std::ios::binary);
        if (!f) {
            std::cerr << "error: cannot write '" << cfg.svg_path << "'\n";
            return 2;
        }
        write_svg(f, table, cfg.fig2 || (cfg.sweep && cfg.sweep->log));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temperature-uncertainty toolkit for dispersive qubit readout"};
    app.require_subcommand(1);

    std::string config_path, out_path, format, svg_path, formula;
    bool fig2 = false, json = false;
    std::map<std::string, double> overrides;
    AxisFlags sweep, sweep2;

    std::map<std::string, CLI::App*> modes;
    for (const char* name : {"ies", "ics", "bounds", "bath"}) {
        auto* sub = app.add_subcommand(name, std::string("evaluate delta T in ") + name + " mode");
        sub->add_option("--config", config_path, "key = value config file");
        sub->add_option("--out", out_path, "output path (default stdout)");
        sub->add_option("--format", format, "csv or json");
        sub->add_option("--svg", svg_path, "also write an SVG plot");
        sub->add_option("--formula", formula, "which closed form to evaluate");
        sub->add_option("--sweep", sweep.variable, "parameter to sweep");
        sub->add_option("--min", sweep.min);
        sub->add_option("--max", sweep.max);
        sub->add_option("--count", sweep.count);
        sub->add_option("--scale", sweep.scale, "lin or log");
        sub->add_option("--sweep2", sweep2.variable, "second swept parameter (one curve per value)");
        sub->add_option("--min2", sweep2.min);
        sub->add_option("--max2", sweep2.max);
        sub->add_option("--count2", sweep2.count);
        sub->add_option("--scale2", sweep2.scale);
        if (std::string(name) == "bath") sub->add_flag("--fig2", fig2, "reference preset: N on [1, 1e6], r in {0, 1, 2}");
        for (const auto& p : param_names()) {
            sub->add_option_function<double>(
                flag_for(p), [&overrides, p](double v) { overrides[p] = v; }, "override " + p);
        }
        modes[name] = sub;
    }
    auto* validate = app.add_subcommand("validate", "closed forms against the moment and Lyapunov oracles");
    validate->add_flag("--json", json, "machine-readable report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (validate->parsed()) return write_report(std::cout, run_validation(), json);

    try {
        ScenarioConfig cfg;
        for (const auto& [name, sub] : modes)
            if (sub->parsed()) cfg.mode = parse_mode(name);
        if (!config_path.empty()) {
            const Mode m = cfg.mode;
            cfg = load_config_file(config_path, cfg);
            if (cfg.mode != m) throw ConfigError("config mode differs from the command");
        }
        for (const auto& [name, v] : overrides) {
            try {
                set_param(cfg.params, name, v);
            } catch (const std::exception& e) {
                throw ConfigError(e.what());
            }
            cfg.explicit_params.insert(name);
        }
        if (!out_path.empty()) cfg.out_path = out_path;
        if (!format.empty()) cfg.format = format;
        if (!svg_path.empty()) cfg.svg_path = svg_path;
        if (!formula.empty()) cfg.formula = formula;
        if (fig2) cfg.fig2 = true;
        for (auto [flags, slot] : {std::pair{&sweep, &cfg.sweep}, std::pair{&sweep2, &cfg.sweep2}}) {
            if (flags->variable.empty()) continue;
            if (flags->scale != "lin" && flags->scale != "log") throw ConfigError("scale must be lin or log");
            *slot = SweepAxis{flags->variable, flags->min, flags->max, flags->count, flags->scale == "log"};
        }
        check_config(cfg);
        return write_output(cfg, run_sweep(cfg));
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
