#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace thermo {

/// Which expression produced a δT value.
enum class Formula {
    IesFull,
    IesSteady,
    IesSteadySimplified,
    IesShortTime,
    IesShortTimeSimplified,
    IcsFull,
    BathFull,
    BathWeakCoupling,
    BathStrongCoupling,
    Optimal,
    StandardQuantumLimit,
};

std::string_view formula_name(Formula f);

struct UncertaintyReport {
    double delta_T = 0.0;
    Formula formula = Formula::IesFull;
    /// Regime diagnostics, e.g. an asymptotic formula used outside its validity range.
    std::vector<std::string> warnings;
};

}  // namespace thermo
