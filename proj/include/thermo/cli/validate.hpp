#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "thermo/model.hpp"

namespace thermo::cli {

struct Check {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    /// Comparisons against printed literature forms are reported but do not gate.
    bool gating = true;
};

/// Replaceable closed-form pieces, so a test can inject a known-bad expression.
struct ValidateHooks {
    std::function<double(const ReadoutParams&, int sigma)> ies_branch_variance;
};

/// Deterministic random parameter sets over the ranges used by the equivalence checks.
std::vector<ReadoutParams> ies_random_grid(std::uint64_t seed, int count);
std::vector<ReadoutParams> bath_random_grid(std::uint64_t seed, int count);

std::vector<Check> run_validation(const ValidateHooks& hooks = {});

/// Writes the report and returns the exit code: 0 if every gating check passed, else 1.
int write_report(std::ostream& out, const std::vector<Check>& checks, bool json);

}  // namespace thermo::cli
