#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "thermo/model.hpp"
#include "thermo/report.hpp"

/// N qubits in permanent contact with a thermal bath, read out in steady state
/// through a common cavity. Qubits enter only through the collective coupling Nχ.
namespace thermo::bath {

struct BathSteadyState {
    std::complex<double> a_mean;   ///< √κ α / (κ/2 - iNχ/(2n+1))
    double sigma_z_mean_bath = 0;  ///< -1/(2n+1)
    std::complex<double> fluct_aa; ///< ⟨(δa)²⟩
    double fluct_n = 0;            ///< ⟨δa†δa⟩
    double var_Q = 0;              ///< quadrature variance at Φ = π/2
    double signal = 0;             ///< S_T
    double squeeze_phase = 0;      ///< φ actually used
};

/// arg(κ - 2iNχ/(2n+1)): makes the squeezing contribution to ⟨(δa)²⟩ real positive,
/// which minimises var_Q.
double optimal_squeeze_phase(const ReadoutParams& params);

/// `squeeze_phase` defaults to optimal_squeeze_phase; params.phi is not consulted.
BathSteadyState steady_state(const ReadoutParams& params, std::optional<double> squeeze_phase = {});

/// √var_Q / S_T. Throws DegenerateSignalError when Nχα = 0.
UncertaintyReport delta_T_bath(const ReadoutParams& params, std::optional<double> squeeze_phase = {});

struct RegimeRatios {
    double weak = 0;          ///< κ / (2Nχ e^r/(2n+1))
    double strong_kappa = 0;  ///< (2Nχ/(2n+1)) / κ
    double strong_gamma = 0;  ///< (2Nχ/(2n+1)) / (4nΓ + 2Γ)
};
RegimeRatios regime_ratios(const ReadoutParams& params);

/// Fast-cavity asymptote, δT ∝ e^{-r}/N. Warns when the regime ratio is below 100.
UncertaintyReport heisenberg_limit(const ReadoutParams& params);
/// Strong-coupling asymptote, δT ∝ N. Warns when either regime ratio is below 100.
UncertaintyReport strong_coupling_limit(const ReadoutParams& params);

/// κ=100, T=1, ω_q=1, χ=1, Γ=10, α_in=100.
ReadoutParams fig2_params();
/// `count` log-spaced points on [1, 1e6], rounded to integers, duplicates dropped.
std::vector<std::int64_t> fig2_n_grid(int count = 121);

struct SweepRow {
    std::int64_t n_qubits = 0;
    double r = 0;
    double delta_T = 0;
    std::string error;  ///< nonempty when the point failed
};

struct Minimum {
    double r = 0;
    std::int64_t n_star = 0;
    double delta_T = 0;
    /// δT strictly decreases before n_star and strictly increases after it.
    bool single_minimum = false;
};

/// Minimum of the error-free rows, which must be ordered by ascending N.
Minimum find_minimum(const std::vector<SweepRow>& rows, double r);

struct Fig2Result {
    std::vector<SweepRow> rows;  ///< r-major, N ascending
    std::vector<Minimum> minima;  ///< one per r
};

Fig2Result fig2_sweep(const ReadoutParams& params, const std::vector<std::int64_t>& n_values,
                      const std::vector<double>& r_list);

}  // namespace thermo::bath
