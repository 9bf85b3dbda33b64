#pragma once

#include <string>
#include <vector>

#include "thermo/bath.hpp"
#include "thermo/cli/config.hpp"

namespace thermo::cli {

struct Row {
    std::vector<double> axes;
    double delta_T = 0.0;
    std::vector<double> extras;
    std::string formula;
    bool regime_warning = false;
    /// ok, degenerate, domain, unstable, integration
    std::string status = "ok";
};

struct SweepTable {
    std::vector<std::string> axis_names;
    std::vector<std::string> extra_names;
    std::vector<Row> rows;
    /// Per-r minimum of δT(N), filled for the fig2 preset.
    std::vector<bath::Minimum> minima;
};

/// Evaluates one point of the configured mode; errors become a flagged row.
Row evaluate_point(const ScenarioConfig& config, const ReadoutParams& params);

/// Rows in sweep2-major, sweep-minor order.
SweepTable run_sweep(const ScenarioConfig& config);

}  // namespace thermo::cli
