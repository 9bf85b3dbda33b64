#pragma once

#include <vector>

#include "thermo/model.hpp"
#include "thermo/report.hpp"

/// Readout with injected squeezing plus a two-photon drive inside the cavity.
///
/// The driven cavity is diagonalised by a Bogoliubov mode b. Closed forms hold
/// under the matched-phase scenario r = r_c, θ' - φ = π, θ' = 2φ_m = 2θ, where the
/// transformed input b_in is vacuum and ⟨δM²⟩ = κτ e^{-2r}.
namespace thermo::ics {

struct BogoliubovParams {
    double r_c = 0.0;         ///< tanh r_c = 2Ω/Δ_c
    double omega_sq = 0.0;    ///< √(Δ_c² - 4Ω²)
    double chi_sq = 0.0;      ///< dispersive coupling of b
    double vartheta_b = 0.0;  ///< phase of the transformation (= θ')
};

/// Throws DomainError for Δ_c = 0, |2Ω| ≥ |Δ_c|, or a pole of χ_sq (Δ_q = ±ω_sq).
BogoliubovParams bogoliubov(const ReadoutParams& params);

/// Copy of `params` with the matched-phase conditions imposed:
/// r = r_c, φ = θ' - π, θ = φ_m = θ'/2.
ReadoutParams matched_scenario(const ReadoutParams& params);

enum class Trig { One, CosCos, CosSin, SinCos, SinSin };

/// One coefficient × e^{-κτ/2 · decays} × trig(ω_sq τ)·trig(χ_sq τ) term.
/// CosSin means cos(ω_sq τ) sin(χ_sq τ).
/// The brackets cancel to O((κτ)⁴) of their largest term as τ → 0, so they are
/// assembled in extended precision.
using Real = long double;

struct BracketTerm {
    Real coefficient;
    bool decays;
    Trig trig;
};

/// Terms of the σ_z-odd bracket; ν = 8α κ^{3/2} Σ / D².
std::vector<BracketTerm> odd_bracket(double kappa, double omega_sq, double chi_sq, double tau);
/// Terms of the σ_z-even bracket; ⟨M⟩|_{σ=0} = 2α√κ Σ / D².
std::vector<BracketTerm> even_bracket(double kappa, double omega_sq, double chi_sq, double tau);
double evaluate(const std::vector<BracketTerm>& terms, double kappa, double omega_sq, double chi_sq, double tau);

/// κ⁴ + 16(ω_sq² - χ_sq²)² + 8κ²(ω_sq² + χ_sq²)
double denominator(double kappa, double omega_sq, double chi_sq);

/// Thermal ⟨M⟩ under matched phases.
double signal_mean_ics(const ReadoutParams& params, const BogoliubovParams& bp);
/// σ_z-odd part of ⟨M⟩.
double nu(const ReadoutParams& params, const BogoliubovParams& bp);
/// ν²(1 - ⟨σ_z⟩²) + κτ e^{-2r}
double noise_var(const ReadoutParams& params, const BogoliubovParams& bp);

/// δT with the squeezing r taken from `params` as given.
UncertaintyReport delta_T_ics(const ReadoutParams& params);

/// κτ → ∞ asymptote 32α ω_sq τ χ_sq κ^{5/2} / D.
double nu_steady(const ReadoutParams& params, const BogoliubovParams& bp);
/// τ → 0 asymptote α κ^{3/2} ω_sq χ_sq τ⁴ / 6.
double nu_short_time(const ReadoutParams& params, const BogoliubovParams& bp);

}  // namespace thermo::ics
