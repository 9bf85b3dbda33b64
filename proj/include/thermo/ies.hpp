#pragma once

#include <complex>

#include "thermo/model.hpp"
#include "thermo/report.hpp"

/// Dispersive readout with injected external squeezing only.
///
/// The qubit is thermalised and then isolated, so σ_z is a constant of motion and
/// every quantity splits into an excited (σ=+1) and a ground (σ=-1) branch.
/// The cavity starts in the same squeezed vacuum (r, φ) that is injected.
namespace thermo::ies {

struct IesIntermediates {
    std::complex<double> Lambda_plus;   ///< -κ/2 - iχ  (σ = +1)
    std::complex<double> Lambda_minus;  ///< -κ/2 + iχ  (σ = -1)
    double A_coef = 0.0;                ///< 1 - κτ/2 - e^{-κτ/2} cos χτ
    double B_coef = 0.0;                ///< e^{-κτ/2} sin χτ - χτ
    double psi = 0.0;                   ///< atan(2χ/κ)
    double vartheta = 0.0;              ///< θ - φ_m
    double mu = 0.0;                    ///< σ-odd part of ⟨M⟩
    double delta_M_sq = 0.0;            ///< thermally averaged branch noise
    double f_T = 0.0;                   ///< steady-state thermal-fluctuation ratio
};

struct SignalNoise {
    double mean_M = 0.0;
    double noise_var = 0.0;
    double dT_mean_M = 0.0;
};

/// Conditional mean and variance of M for one qubit branch.
struct Branch {
    double mean = 0.0;
    double variance = 0.0;
};

/// `sigma` must be +1 or -1.
Branch branch_moments(const ReadoutParams& params, int sigma);

IesIntermediates intermediates(const ReadoutParams& params);

/// Thermal ⟨M⟩ = p_e M(+1) + p_g M(-1).
double signal_mean(const ReadoutParams& params);

struct NoiseTerms {
    double mu = 0.0;
    double delta_M_sq = 0.0;
    double noise_var = 0.0;  ///< μ²(1 - ⟨σ_z⟩²) + ⟨δM²⟩
};
NoiseTerms noise_var(const ReadoutParams& params);

SignalNoise signal_noise(const ReadoutParams& params);

/// Branch-separation SNR; throws DegenerateSignalError if both branch variances vanish.
double snr(const ReadoutParams& params);

/// Error-propagation δT; throws DegenerateSignalError when ∂_T⟨M⟩ = 0.
UncertaintyReport delta_T(const ReadoutParams& params);

/// Long-time asymptote, valid for κτ ≫ 1. Requires φ - 2φ_m ≡ π.
/// `simplified` substitutes cos 4ψ -> 1.
UncertaintyReport delta_T_steady(const ReadoutParams& params, bool simplified = false);

/// Literature short-time asymptote for κτ ≪ 1. Requires φ - 2φ_m ≡ π.
/// Note: the exact δT falls as τ^{-5/2} in this limit, this form as τ^{-3/2}.
UncertaintyReport delta_T_short_time(const ReadoutParams& params, bool simplified = false);

/// κτ[cosh 2r - sinh 2r cos 4ψ]: stationary branch noise at φ - 2φ_m = π.
double steady_noise(const ReadoutParams& params, bool simplified = false);

/// Term-by-term transcriptions of the literature closed forms. Kept for comparison
/// against the moment equations only; they do not agree with them in general.
namespace transcribed {
double signal_mean(const ReadoutParams& params);
/// μ with sin φ (squeeze phase) in place of sin(θ - φ_m).
double mu_sin_phi(const ReadoutParams& params);
double delta_M_sq(const ReadoutParams& params);
}  // namespace transcribed

}  // namespace thermo::ies
