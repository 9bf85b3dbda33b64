#pragma once

#include <complex>

#include <Eigen/Dense>

#include "thermo/model.hpp"

/// Numerical ground truth built only from the Langevin equations.
///
/// Every system here has the state z = (x, x†, y): a cavity-like mode, its adjoint and
/// a third coordinate (the integrated quadrature M for readout, the collective qubit
/// fluctuation δs for bath contact). Second moments are operator-ordered,
/// Σ_ij = ⟨z_i z_j⟩ - ⟨z_i⟩⟨z_j⟩, and obey Σ' = FΣ + ΣFᵀ + G N Gᵀ with N the ordered
/// δ-correlation table of the input channels.
namespace thermo::oracle {

using cplx = std::complex<double>;
using Mat3 = Eigen::Matrix3cd;
using Vec3 = Eigen::Vector3cd;

struct LinearSystemSpec {
    Mat3 drift = Mat3::Zero();        ///< F at σ_z = 0
    Mat3 drift_sigma = Mat3::Zero();  ///< F(σ) = drift + σ·drift_sigma
    Vec3 source = Vec3::Zero();       ///< constant mean forcing from the coherent input
    Mat3 input_coupling = Mat3::Zero();
    Mat3 noise_cov = Mat3::Zero();
    Vec3 mean0 = Vec3::Zero();
    Mat3 cov0 = Mat3::Zero();
    /// Result magnitude below which errors are judged absolutely, for Richardson control.
    double scale = 1.0;

    Mat3 drift_at(int sigma) const { return drift + static_cast<double>(sigma) * drift_sigma; }
    Mat3 diffusion() const { return input_coupling * noise_cov * input_coupling.transpose(); }
};

struct MomentState {
    Vec3 m1 = Vec3::Zero();
    Mat3 m2 = Mat3::Zero();
    double t = 0.0;
};

/// Homodyne readout of the bare cavity with the injected squeezed input; the cavity
/// starts in that same squeezed vacuum.
LinearSystemSpec ies_readout_spec(const ReadoutParams& params);

/// Readout in the Bogoliubov frame: b_in statistics from transforming the input,
/// b(0) in vacuum, quadrature weight mapped back to the lab frame.
LinearSystemSpec ics_readout_spec(const ReadoutParams& params);

/// Lab-frame readout with cavity detuning Δ_c and the two-photon drive coupling a to a†.
/// The cavity starts in vacuum.
LinearSystemSpec detuned_readout_spec(const ReadoutParams& params);

/// ⟨b_in b_in⟩ at index (0,0), ⟨b_in b_in†⟩ at (0,1), ⟨b_in† b_in⟩ at (1,0),
/// ⟨b_in† b_in†⟩ at (1,1); vacuum is [[0,1],[0,0]].
Eigen::Matrix2cd bogoliubov_input_noise(const ReadoutParams& params);

/// Fixed-step RK4 over [0, τ] with `steps` steps.
MomentState propagate(const LinearSystemSpec& spec, int sigma, double tau, long steps);

/// Step count from min(1/κ, 1/|Im λ|, τ)/200 for the branch's drift.
long default_steps(const LinearSystemSpec& spec, int sigma, double tau);

struct QuadratureMoments {
    double mean = 0.0;
    double variance = 0.0;
    double error_estimate = 0.0;
};

/// Branch moments of the accumulator, step-halved until the Richardson estimate meets
/// `rtol`; throws IntegrationError otherwise.
QuadratureMoments quadrature_moments(const LinearSystemSpec& spec, int sigma, double tau, double rtol = 1e-10);

double integrated_quadrature_mean(const LinearSystemSpec& spec, int sigma, double tau);
double integrated_quadrature_variance(const LinearSystemSpec& spec, int sigma, double tau);

/// Thermal mixture of the two branches: the classical spread of branch means plus the
/// weighted branch variances.
QuadratureMoments thermal_quadrature_moments(const LinearSystemSpec& spec, const ReadoutParams& params, double tau);

/// δT by error propagation from oracle moments, ∂_T by central difference in T.
double delta_T_numeric(const ReadoutParams& params, LinearSystemSpec (*make_spec)(const ReadoutParams&));

/// Fluctuation system for bath contact: (δa, δa†, δs) with δs the collective qubit noise.
LinearSystemSpec bath_fluctuation_spec(const ReadoutParams& params, double squeeze_phase);

/// Steady-state Σ from FΣ + ΣFᵀ + G N Gᵀ = 0. Throws InstabilityError unless every
/// eigenvalue of F has negative real part.
Mat3 lyapunov_covariance(const LinearSystemSpec& spec);

/// Var(x e^{-iφ} + x† e^{iφ}) with vacuum = 1, from an ordered covariance.
double quadrature_variance(const Mat3& cov, double angle);

/// max_Φ |∂_T ⟨x e^{-iΦ} + h.c.⟩| for the bath-contact steady-state mean, by central
/// difference of the stationary solution of the mean equation.
double bath_signal(const ReadoutParams& params);

}  // namespace thermo::oracle
