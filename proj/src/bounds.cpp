#include "thermo/bounds.hpp"

#include <cmath>

namespace thermo::bounds {

double qfi(const ReadoutParams& p) {
    thermal_qubit(p);  // domain checks
    const double x = p.omega_q / p.temperature;
    // P(1-P) = 1/(4 cosh²(x/2)) stays finite where e^{±x} would overflow
    const double c = std::cosh(0.5 * x);
    const double pq = 0.25 / (c * c);
    const double g = x / p.temperature;
    return pq * g * g;
}

double optimal_delta_T(const ReadoutParams& p) {
    const auto q = thermal_qubit(p);
    return std::sqrt(q.sigma_z_variance()) / std::abs(q.d_sigma_z_dT);
}

double sql_delta_T(const ReadoutParams& p) {
    p.validate();
    return optimal_delta_T(p) / std::sqrt(static_cast<double>(p.n_qubits));
}

BoundReport bound_report(const ReadoutParams& p) {
    BoundReport b;
    b.qfi = qfi(p);
    b.crb = 1.0 / std::sqrt(b.qfi);
    b.optimal_dT = optimal_delta_T(p);
    b.sql_dT_N = sql_delta_T(p);
    return b;
}

double printed_optimal_delta_T(const ReadoutParams& p) {
    thermal_qubit(p);
    const double T = p.temperature;
    return 2.0 * T * T * std::sqrt(1.0 + std::cosh(p.omega_q / T)) / p.omega_q;
}

}  // namespace thermo::bounds
