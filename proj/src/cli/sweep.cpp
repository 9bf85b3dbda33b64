#include "thermo/cli/sweep.hpp"

#include <cmath>

#include "thermo/bounds.hpp"
#include "thermo/errors.hpp"
#include "thermo/ics.hpp"
#include "thermo/ies.hpp"

namespace thermo::cli {

namespace {

std::vector<std::string> extra_columns(Mode m) {
    switch (m) {
        case Mode::Bounds: return {"qfi", "crb", "sql_dT_N"};
        case Mode::Bath: return {"var_Q", "signal"};
        default: return {};
    }
}

UncertaintyReport evaluate_report(const ScenarioConfig& cfg, const ReadoutParams& p, std::vector<double>& extras) {
    switch (cfg.mode) {
        case Mode::Ies:
            if (cfg.formula == "steady") return ies::delta_T_steady(p, false);
            if (cfg.formula == "steady_simplified") return ies::delta_T_steady(p, true);
            if (cfg.formula == "short_time") return ies::delta_T_short_time(p, false);
            if (cfg.formula == "short_time_simplified") return ies::delta_T_short_time(p, true);
            return ies::delta_T(p);
        case Mode::Ics:
            return ics::delta_T_ics(p);
        case Mode::Bounds: {
            const auto b = bounds::bound_report(p);
            extras = {b.qfi, b.crb, b.sql_dT_N};
            return {b.optimal_dT, Formula::Optimal, {}};
        }
        case Mode::Bath: {
            std::optional<double> phase;
            if (cfg.explicit_params.contains("phi")) phase = p.phi;
            const auto st = bath::steady_state(p, phase);
            extras = {st.var_Q, st.signal};
            if (cfg.formula == "weak") return bath::heisenberg_limit(p);
            if (cfg.formula == "strong") return bath::strong_coupling_limit(p);
            return bath::delta_T_bath(p, phase);
        }
    }
    return {};
}

}  // namespace

Row evaluate_point(const ScenarioConfig& cfg, const ReadoutParams& p) {
    Row row;
    row.extras.assign(extra_columns(cfg.mode).size(), std::nan(""));
    try {
        std::vector<double> extras;
        const auto rep = evaluate_report(cfg, p, extras);
        row.delta_T = rep.delta_T;
        row.formula = std::string(formula_name(rep.formula));
        row.regime_warning = !rep.warnings.empty();
        if (!extras.empty()) row.extras = extras;
    } catch (const DegenerateSignalError&) {
        row.status = "degenerate";
    } catch (const DomainError&) {
        row.status = "domain";
    } catch (const InstabilityError&) {
        row.status = "unstable";
    } catch (const IntegrationError&) {
        row.status = "integration";
    }
    if (row.status != "ok") row.delta_T = std::nan("");
    return row;
}

SweepTable run_sweep(const ScenarioConfig& cfg) {
    check_config(cfg);
    SweepTable table;
    table.extra_names = extra_columns(cfg.mode);

    if (cfg.fig2) {
        ReadoutParams base = bath::fig2_params();
        for (const auto& name : cfg.explicit_params) set_param(base, name, get_param(cfg.params, name));
        const auto grid = bath::fig2_n_grid();
        const std::vector<double> rs{0.0, 1.0, 2.0};
        table.axis_names = {"n_qubits", "r"};
        for (double r : rs) {
            std::vector<bath::SweepRow> curve;
            for (auto n : grid) {
                ReadoutParams p = base;
                p.r = r;
                p.n_qubits = n;
                auto row = evaluate_point(cfg, p);
                row.axes = {static_cast<double>(n), r};
                curve.push_back({n, r, row.delta_T, row.status == "ok" ? "" : row.status});
                table.rows.push_back(std::move(row));
            }
            table.minima.push_back(bath::find_minimum(curve, r));
        }
        return table;
    }

    if (!cfg.sweep) {
        table.rows.push_back(evaluate_point(cfg, cfg.params));
        return table;
    }

    table.axis_names.push_back(cfg.sweep->variable);
    std::vector<double> outer{std::nan("")};
    if (cfg.sweep2) {
        table.axis_names.push_back(cfg.sweep2->variable);
        outer = axis_values(*cfg.sweep2);
    }
    const auto inner = axis_values(*cfg.sweep);
    for (double y : outer) {
        for (double x : inner) {
            ReadoutParams p = cfg.params;
            Row row;
            try {
                set_param(p, cfg.sweep->variable, x);
                if (cfg.sweep2) set_param(p, cfg.sweep2->variable, y);
                row = evaluate_point(cfg, p);
            } catch (const DomainError&) {
                row.status = "domain";
                row.delta_T = std::nan("");
                row.extras.assign(table.extra_names.size(), std::nan(""));
            }
            row.axes = {x};
            if (cfg.sweep2) row.axes.push_back(y);
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

}  // namespace thermo::cli
