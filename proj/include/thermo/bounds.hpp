#pragma once

#include "thermo/model.hpp"

/// Fundamental precision limits for a thermal qubit probe.
namespace thermo::bounds {

struct BoundReport {
    double qfi = 0.0;
    double crb = 0.0;         ///< 1/√F
    double optimal_dT = 0.0;  ///< √(1 - ⟨σ_z⟩²)/|∂_T⟨σ_z⟩|
    double sql_dT_N = 0.0;    ///< optimal_dT/√N
};

/// Fisher information of the diagonal thermal state, (∂_T P)²/(P(1-P)).
double qfi(const ReadoutParams& params);
double optimal_delta_T(const ReadoutParams& params);
double sql_delta_T(const ReadoutParams& params);
BoundReport bound_report(const ReadoutParams& params);

/// The literature's printed prefactor form 2T²√(1 + cosh(ω/T))/ω, which is √2 times
/// optimal_delta_T. Reporting only.
double printed_optimal_delta_T(const ReadoutParams& params);

}  // namespace thermo::bounds
