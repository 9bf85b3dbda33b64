#include "thermo/bath.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "thermo/errors.hpp"

namespace thermo::bath {

namespace {

using cplx = std::complex<double>;

struct Collective {
    double n, dn, N, wp, gamma, X;
};

Collective collective(const ReadoutParams& p) {
    p.validate();
    if (!(p.Gamma > 0.0)) throw DomainError("bath: Gamma must be positive");
    const auto q = thermal_qubit(p);
    Collective c;
    c.n = q.n_bose;
    c.dn = q.d_n_dT;
    c.N = static_cast<double>(p.n_qubits);
    c.wp = c.N * p.chi / (2.0 * c.n + 1.0);
    c.gamma = 4.0 * p.Gamma * c.n + 2.0 * p.Gamma;
    c.X = 2.0 * c.n * c.n + 4.0 * c.n + 1.0;
    return c;
}

}  // namespace

double optimal_squeeze_phase(const ReadoutParams& p) {
    const auto c = collective(p);
    return std::arg(cplx(p.kappa, -2.0 * c.wp));
}

BathSteadyState steady_state(const ReadoutParams& p, std::optional<double> squeeze_phase) {
    const auto c = collective(p);
    const double k = p.kappa;
    const double chi = p.chi;
    const double s = 2.0 * c.n + 1.0;
    const double Nc2 = c.N * c.N * chi * chi;

    BathSteadyState st;
    st.squeeze_phase = squeeze_phase ? *squeeze_phase : optimal_squeeze_phase(p);
    st.a_mean = std::sqrt(k) * p.alpha_in / cplx(0.5 * k, -c.wp);
    st.sigma_z_mean_bath = -1.0 / s;

    const cplx lam(0.5 * k, -c.wp);
    st.fluct_aa = k * std::polar(1.0, st.squeeze_phase) * std::sinh(2.0 * p.r) / (2.0 * cplx(k, -2.0 * c.wp)) -
                  2.0 * Nc2 * c.X / (s * s * lam * (lam + c.gamma));
    const double kg = 0.5 * k + c.gamma;
    st.fluct_n = std::sinh(p.r) * std::sinh(p.r) + 4.0 * Nc2 * kg * c.X / (k * s * s * (c.wp * c.wp + kg * kg));
    st.var_Q = 2.0 * st.fluct_n + 1.0 - 2.0 * st.fluct_aa.real();
    st.signal = 2.0 * std::sqrt(k) * p.alpha_in * c.N * chi * std::abs(c.dn) * s / (Nc2 + s * s * 0.25 * k * k);
    return st;
}

UncertaintyReport delta_T_bath(const ReadoutParams& p, std::optional<double> squeeze_phase) {
    const auto st = steady_state(p, squeeze_phase);
    if (!(st.signal > 0.0)) throw DegenerateSignalError("bath: no temperature signal (N chi alpha = 0)");
    return {std::sqrt(st.var_Q) / st.signal, Formula::BathFull, {}};
}

RegimeRatios regime_ratios(const ReadoutParams& p) {
    const auto c = collective(p);
    const double shift = 2.0 * c.wp;
    RegimeRatios r;
    r.weak = p.kappa / (shift * std::exp(p.r));
    r.strong_kappa = shift / p.kappa;
    r.strong_gamma = shift / c.gamma;
    return r;
}

UncertaintyReport heisenberg_limit(const ReadoutParams& p) {
    const auto c = collective(p);
    const double k = p.kappa;
    UncertaintyReport rep;
    rep.formula = Formula::BathWeakCoupling;
    rep.delta_T = (2.0 * c.n + 1.0) * k * k * std::exp(-p.r) /
                  (8.0 * std::sqrt(k) * p.alpha_in * c.N * p.chi * std::abs(c.dn));
    const auto ratio = regime_ratios(p).weak;
    if (ratio < 100.0) rep.warnings.push_back("weak-coupling ratio " + std::to_string(ratio) + " < 100");
    return rep;
}

UncertaintyReport strong_coupling_limit(const ReadoutParams& p) {
    const auto c = collective(p);
    const double k = p.kappa;
    const double s = 2.0 * c.n + 1.0;
    UncertaintyReport rep;
    rep.formula = Formula::BathStrongCoupling;
    rep.delta_T = c.N * p.chi * std::sqrt(8.0 * s * c.X * p.Gamma + 2.0 * k * std::cosh(2.0 * p.r)) /
                  (8.0 * k * p.alpha_in * std::abs(c.dn) * s);
    const auto ratios = regime_ratios(p);
    if (ratios.strong_kappa < 100.0)
        rep.warnings.push_back("strong-coupling kappa ratio " + std::to_string(ratios.strong_kappa) + " < 100");
    if (ratios.strong_gamma < 100.0)
        rep.warnings.push_back("strong-coupling gamma ratio " + std::to_string(ratios.strong_gamma) + " < 100");
    return rep;
}

ReadoutParams fig2_params() {
    ReadoutParams p;
    p.kappa = 100.0;
    p.temperature = 1.0;
    p.omega_q = 1.0;
    p.chi = 1.0;
    p.Gamma = 10.0;
    p.alpha_in = 100.0;
    p.Phi = std::numbers::pi / 2;
    return p;
}

std::vector<std::int64_t> fig2_n_grid(int count) {
    if (count < 2) throw DomainError("fig2 grid needs at least two points");
    std::vector<std::int64_t> out;
    for (int i = 0; i < count; ++i) {
        const double e = 6.0 * i / (count - 1);
        const auto n = static_cast<std::int64_t>(std::llround(std::pow(10.0, e)));
        if (out.empty() || out.back() != n) out.push_back(n);
    }
    return out;
}

Minimum find_minimum(const std::vector<SweepRow>& rows, double r) {
    Minimum m{r, 0, std::numeric_limits<double>::infinity(), false};
    std::vector<const SweepRow*> ok;
    for (const auto& row : rows)
        if (row.error.empty()) ok.push_back(&row);
    std::size_t at = 0;
    for (std::size_t i = 0; i < ok.size(); ++i) {
        if (ok[i]->delta_T < m.delta_T) {
            m.delta_T = ok[i]->delta_T;
            m.n_star = ok[i]->n_qubits;
            at = i;
        }
    }
    bool single = !ok.empty();
    for (std::size_t i = 1; i < ok.size() && single; ++i)
        single = (i <= at) ? ok[i]->delta_T < ok[i - 1]->delta_T : ok[i]->delta_T > ok[i - 1]->delta_T;
    m.single_minimum = single;
    return m;
}

Fig2Result fig2_sweep(const ReadoutParams& params, const std::vector<std::int64_t>& n_values,
                      const std::vector<double>& r_list) {
    if (n_values.empty()) throw DomainError("fig2 sweep needs at least one N");
    Fig2Result res;
    for (double r : r_list) {
        const auto first = res.rows.size();
        for (auto n : n_values) {
            ReadoutParams p = params;
            p.r = r;
            p.n_qubits = n;
            SweepRow row{n, r, std::nan(""), {}};
            try {
                row.delta_T = delta_T_bath(p).delta_T;
            } catch (const std::exception& e) {
                row.error = e.what();
            }
            res.rows.push_back(row);
        }

        res.minima.push_back(find_minimum({res.rows.begin() + first, res.rows.end()}, r));
    }
    return res;
}

}  // namespace thermo::bath
