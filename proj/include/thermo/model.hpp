#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

namespace thermo {

/**
 * Physical constants of one readout scenario.
 *
 * Units are dimensionless with hbar = k_B = 1; pick any base frequency.
 * Two different phases are kept apart: `phi` is the squeezing reference
 * phase of the input field, `varphi` is the homodyne measurement angle.
 */
struct ReadoutParams {
    double omega_q = 1.0;      ///< qubit transition frequency
    double omega_c = 0.0;      ///< cavity frequency (only enters through the rotating frame)
    double chi = 1.0;          ///< dispersive coupling
    double kappa = 100.0;      ///< cavity photon loss rate
    double r = 0.0;            ///< input squeezing parameter
    double phi = std::numbers::pi;        ///< squeeze reference phase
    double theta = std::numbers::pi / 2;  ///< coherent drive phase
    double varphi = 0.0;       ///< homodyne measurement angle
    double alpha_in = 100.0;   ///< coherent input amplitude (real, >= 0)
    double tau = 1.0;          ///< measurement time
    double temperature = 1.0;
    double Omega = 0.0;        ///< two-photon drive amplitude
    double theta_prime = 0.0;  ///< two-photon drive phase
    double Delta_c = 5.0;      ///< cavity detuning from half the two-photon drive frequency
    double Delta_q = 10.0;     ///< qubit detuning from half the two-photon drive frequency
    double Gamma = 10.0;       ///< qubit-bath rate
    std::int64_t n_qubits = 1;
    double Phi = std::numbers::pi / 2;    ///< quadrature angle for the bath-contact readout

    /// Throws DomainError unless kappa > 0, T > 0, alpha_in >= 0, tau >= 0, N >= 1.
    void validate() const;
};

/// Names of the real-valued fields, as used by configs and sweeps.
const std::vector<std::string>& param_names();
/// Throws DomainError for an unknown name.
double get_param(const ReadoutParams& p, const std::string& name);
void set_param(ReadoutParams& p, const std::string& name, double value);

/// Thermal-equilibrium quantities of one qubit at the bath temperature.
struct ThermalQubit {
    double sigma_z_mean = 0.0;  ///< ⟨σ_z⟩ ∈ (-1, 0)
    double d_sigma_z_dT = 0.0;  ///< ∂_T⟨σ_z⟩ > 0
    double p_ground = 1.0;
    double p_excited = 0.0;     ///< computed directly, not as 1 - p_ground, to keep low-T digits
    double n_bose = 0.0;        ///< 1/(e^{ω_q/T} - 1)
    double d_n_dT = 0.0;        ///< (n² + n) ω_q / T²

    /// 1 - ⟨σ_z⟩², without the cancellation at low T.
    double sigma_z_variance() const { return 4.0 * p_excited * p_ground; }
};

/// Throws DomainError if T <= 0 or omega_q <= 0.
ThermalQubit thermal_qubit(const ReadoutParams& params);

}  // namespace thermo
