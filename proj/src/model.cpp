#include "thermo/model.hpp"

#include <cmath>

#include "thermo/errors.hpp"
#include "thermo/report.hpp"

namespace thermo {

void ReadoutParams::validate() const {
    if (!(kappa > 0.0)) throw DomainError("kappa must be positive");
    if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
    if (!(alpha_in >= 0.0)) throw DomainError("alpha_in must be non-negative");
    if (!(tau >= 0.0)) throw DomainError("tau must be non-negative");
    if (n_qubits < 1) throw DomainError("n_qubits must be at least 1");
}

namespace {

struct Field {
    const char* name;
    double ReadoutParams::*member;
};

constexpr Field kFields[] = {
    {"omega_q", &ReadoutParams::omega_q},   {"omega_c", &ReadoutParams::omega_c},
    {"chi", &ReadoutParams::chi},           {"kappa", &ReadoutParams::kappa},
    {"r", &ReadoutParams::r},               {"phi", &ReadoutParams::phi},
    {"theta", &ReadoutParams::theta},       {"varphi", &ReadoutParams::varphi},
    {"alpha_in", &ReadoutParams::alpha_in}, {"tau", &ReadoutParams::tau},
    {"temperature", &ReadoutParams::temperature},
    {"Omega", &ReadoutParams::Omega},       {"theta_prime", &ReadoutParams::theta_prime},
    {"Delta_c", &ReadoutParams::Delta_c},   {"Delta_q", &ReadoutParams::Delta_q},
    {"Gamma", &ReadoutParams::Gamma},       {"Phi", &ReadoutParams::Phi},
};

}  // namespace

const std::vector<std::string>& param_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& f : kFields) v.emplace_back(f.name);
        v.emplace_back("n_qubits");
        return v;
    }();
    return names;
}

double get_param(const ReadoutParams& p, const std::string& name) {
    for (const auto& f : kFields)
        if (name == f.name) return p.*(f.member);
    if (name == "n_qubits") return static_cast<double>(p.n_qubits);
    throw DomainError("unknown parameter '" + name + "'");
}

void set_param(ReadoutParams& p, const std::string& name, double value) {
    for (const auto& f : kFields) {
        if (name == f.name) {
            p.*(f.member) = value;
            return;
        }
    }
    if (name == "n_qubits") {
        if (!(value >= 1.0) || value != std::floor(value) || value > 9.0e15)
            throw DomainError("n_qubits must be a positive integer");
        p.n_qubits = static_cast<std::int64_t>(value);
        return;
    }
    throw DomainError("unknown parameter '" + name + "'");
}

ThermalQubit thermal_qubit(const ReadoutParams& params) {
    const double T = params.temperature;
    const double w = params.omega_q;
    if (!(T > 0.0)) throw DomainError("thermal_qubit: temperature must be positive");
    if (!(w > 0.0)) throw DomainError("thermal_qubit: omega_q must be positive");

    const double x = w / T;
    ThermalQubit q;
    // (1 - e^x)/(1 + e^x) == -tanh(x/2), without overflow for large x
    q.sigma_z_mean = -std::tanh(0.5 * x);
    const double sech = 1.0 / std::cosh(0.5 * x);
    q.d_sigma_z_dT = 0.5 * (x / T) * sech * sech;
    q.p_ground = 1.0 / (1.0 + std::exp(-x));
    q.p_excited = 1.0 / (1.0 + std::exp(x));
    q.n_bose = 1.0 / std::expm1(x);
    q.d_n_dT = (q.n_bose * q.n_bose + q.n_bose) * x / T;
    return q;
}

std::string_view formula_name(Formula f) {
    switch (f) {
        case Formula::IesFull: return "ies_full";
        case Formula::IesSteady: return "ies_steady";
        case Formula::IesSteadySimplified: return "ies_steady_simplified";
        case Formula::IesShortTime: return "ies_short_time";
        case Formula::IesShortTimeSimplified: return "ies_short_time_simplified";
        case Formula::IcsFull: return "ics_full";
        case Formula::BathFull: return "bath_full";
        case Formula::BathWeakCoupling: return "bath_weak_coupling";
        case Formula::BathStrongCoupling: return "bath_strong_coupling";
        case Formula::Optimal: return "optimal";
        case Formula::StandardQuantumLimit: return "standard_quantum_limit";
    }
    return "unknown";
}

}  // namespace thermo
