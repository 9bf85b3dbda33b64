#include "thermo/ies.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "thermo/detail/exp_kernels.hpp"
#include "thermo/errors.hpp"

namespace thermo::ies {

using detail::cplx;
using detail::phi1;
using detail::phi2;

namespace {

cplx branch_lambda(const ReadoutParams& p, int sigma) {
    return {-0.5 * p.kappa, -static_cast<double>(sigma) * p.chi};
}

void check_sigma(int sigma) {
    if (sigma != 1 && sigma != -1) throw DomainError("qubit branch must be +1 or -1");
}

// φ - 2φ_m ≡ π (mod 2π)
void require_squeeze_alignment(const ReadoutParams& p) {
    const double d = std::remainder(p.phi - 2.0 * p.varphi - std::numbers::pi, 2.0 * std::numbers::pi);
    if (std::abs(d) > 1e-9)
        throw DomainError("asymptotic form requires phi - 2*varphi = pi (mod 2pi)");
}

double checked_sin_vartheta(const ReadoutParams& p) {
    const double s = std::sin(p.theta - p.varphi);
    if (std::abs(s) < 1e-12 || p.chi == 0.0 || p.alpha_in == 0.0 || p.tau == 0.0)
        throw DegenerateSignalError("temperature does not reach the quadrature signal");
    return s;
}

}  // namespace

Branch branch_moments(const ReadoutParams& p, int sigma) {
    p.validate();
    check_sigma(sigma);
    const double k = p.kappa;
    const double tau = p.tau;
    const cplx L = branch_lambda(p, sigma);
    const cplx z = L * tau;
    const cplx rot = std::polar(1.0, p.theta - p.varphi);

    Branch b;
    b.mean = 2.0 * std::sqrt(k) * p.alpha_in * tau * std::real(rot * (1.0 - k * tau * phi2(z)));

    // Output-field kernel g(u) = c0 - c1 e^{Λu}; the c0²... combination is ∫g² and
    // h = ∫e^{Λu} carries the initial cavity state.
    const cplx c1 = k / L;
    const cplx c0 = 1.0 + c1;
    const cplx g_sq = c0 * c0 * tau - 2.0 * c0 * c1 * tau * phi1(z) + c1 * c1 * tau * phi1(2.0 * z);
    const cplx h = tau * phi1(z);
    const cplx squeeze = std::polar(1.0, p.phi - 2.0 * p.varphi);
    b.variance = k * tau * std::cosh(2.0 * p.r) +
                 k * std::sinh(2.0 * p.r) * std::real(squeeze * (g_sq + k * h * h));
    return b;
}

IesIntermediates intermediates(const ReadoutParams& p) {
    p.validate();
    const auto q = thermal_qubit(p);
    const double k = p.kappa;
    const double tau = p.tau;

    IesIntermediates m;
    m.Lambda_plus = branch_lambda(p, +1);
    m.Lambda_minus = branch_lambda(p, -1);
    const cplx w = m.Lambda_plus * tau;
    const cplx e = w * w * phi2(w);  // e^w - 1 - w
    m.A_coef = -e.real();
    m.B_coef = -e.imag();
    m.psi = std::atan(2.0 * p.chi / k);
    m.vartheta = p.theta - p.varphi;
    m.mu = 2.0 * std::pow(k, 1.5) * p.alpha_in * tau * tau * std::sin(m.vartheta) * phi2(w).imag();

    const auto plus = branch_moments(p, +1);
    const auto minus = branch_moments(p, -1);
    m.delta_M_sq = q.p_excited * plus.variance + q.p_ground * minus.variance;

    const double l2 = p.chi * p.chi + 0.25 * k * k;
    m.f_T = 4.0 * p.alpha_in * p.alpha_in * k * k * p.chi * p.chi * tau *
            q.sigma_z_variance() / (l2 * l2);
    return m;
}

double signal_mean(const ReadoutParams& p) {
    const auto q = thermal_qubit(p);
    return q.p_excited * branch_moments(p, +1).mean + q.p_ground * branch_moments(p, -1).mean;
}

NoiseTerms noise_var(const ReadoutParams& p) {
    const auto q = thermal_qubit(p);
    const auto m = intermediates(p);
    NoiseTerms n;
    n.mu = m.mu;
    n.delta_M_sq = m.delta_M_sq;
    n.noise_var = m.mu * m.mu * q.sigma_z_variance() + m.delta_M_sq;
    return n;
}

SignalNoise signal_noise(const ReadoutParams& p) {
    const auto q = thermal_qubit(p);
    const auto n = noise_var(p);
    return {signal_mean(p), n.noise_var, n.mu * q.d_sigma_z_dT};
}

double snr(const ReadoutParams& p) {
    const auto e = branch_moments(p, +1);
    const auto g = branch_moments(p, -1);
    const double denom = std::sqrt(e.variance + g.variance);
    if (!(denom > 0.0)) throw DegenerateSignalError("snr: both branch noises vanish");
    return std::abs(e.mean - g.mean) / denom;
}

UncertaintyReport delta_T(const ReadoutParams& p) {
    const auto sn = signal_noise(p);
    if (sn.dT_mean_M == 0.0 || !std::isfinite(sn.dT_mean_M) || std::abs(std::sin(p.theta - p.varphi)) < 1e-12)
        throw DegenerateSignalError("ies: temperature decoupled from the output quadrature");
    return {std::sqrt(sn.noise_var) / std::abs(sn.dT_mean_M), Formula::IesFull, {}};
}

double steady_noise(const ReadoutParams& p, bool simplified) {
    const double psi = std::atan(2.0 * p.chi / p.kappa);
    const double c4 = simplified ? 1.0 : std::cos(4.0 * psi);
    return p.kappa * p.tau * (std::cosh(2.0 * p.r) - std::sinh(2.0 * p.r) * c4);
}

UncertaintyReport delta_T_steady(const ReadoutParams& p, bool simplified) {
    p.validate();
    require_squeeze_alignment(p);
    const double s = std::abs(checked_sin_vartheta(p));
    const auto q = thermal_qubit(p);
    const double k = p.kappa;
    const double a = p.alpha_in;
    const double l2 = p.chi * p.chi + 0.25 * k * k;
    const double f = 4.0 * a * a * k * k * p.chi * p.chi * p.tau *
                     q.sigma_z_variance() / (l2 * l2) * s * s;

    UncertaintyReport rep;
    if (simplified) {
        const double x = p.omega_q / p.temperature;
        rep.delta_T = l2 * p.temperature * p.temperature * (1.0 + std::cosh(x)) *
                      std::sqrt(std::exp(-2.0 * p.r) + f) /
                      (2.0 * a * k * std::sqrt(p.tau) * p.chi * p.omega_q * s);
        rep.formula = Formula::IesSteadySimplified;
    } else {
        const double psi = std::atan(2.0 * p.chi / k);
        const double noise = std::cosh(2.0 * p.r) - std::sinh(2.0 * p.r) * std::cos(4.0 * psi);
        rep.delta_T = std::sqrt(noise + f) /
                      (2.0 * a * k * std::sqrt(p.tau) * p.chi * s * q.d_sigma_z_dT / l2);
        rep.formula = Formula::IesSteady;
    }
    if (k * p.tau < 100.0)
        rep.warnings.push_back("steady-state form used at kappa*tau=" + std::to_string(k * p.tau));
    return rep;
}

UncertaintyReport delta_T_short_time(const ReadoutParams& p, bool simplified) {
    p.validate();
    require_squeeze_alignment(p);
    const double s = std::abs(checked_sin_vartheta(p));
    const auto q = thermal_qubit(p);
    const double k = p.kappa;
    const double chi = p.chi;
    const double a = p.alpha_in;
    const double tau = p.tau;
    const double l4 = 4.0 * chi * chi + k * k;

    UncertaintyReport rep;
    if (simplified) {
        const double x = p.omega_q / p.temperature;
        rep.delta_T = std::exp(-p.r) * l4 * l4 * p.temperature * p.temperature * (1.0 + std::cosh(x)) /
                      (4.0 * a * std::pow(k, 4) * std::pow(tau, 1.5) * chi * p.omega_q * s);
        rep.formula = Formula::IesShortTimeSimplified;
    } else {
        const double psi = std::atan(2.0 * chi / k);
        const double delta =
            std::cosh(2.0 * p.r) -
            std::sinh(2.0 * p.r) * (std::cos(4.0 * psi) + std::cos(psi) * std::sin(2.0 * psi) * std::sin(3.0 * psi)) +
            4.0 * chi * std::cos(psi) * std::cos(3.0 * psi) * std::sin(psi) * q.sigma_z_mean / k;
        const double thermal = 16.0 * a * a * std::pow(k, 8) * tau * tau * tau * chi * chi *
                               q.sigma_z_variance() * s * s / std::pow(l4, 4);
        if (delta + thermal < 0.0) throw DomainError("short-time form has negative noise here");
        rep.delta_T = std::sqrt(delta + thermal) /
                      (4.0 * a * std::pow(k, 4) * std::pow(tau, 1.5) * chi * s * q.d_sigma_z_dT / (l4 * l4));
        rep.formula = Formula::IesShortTime;
    }
    if (k * tau > 1e-2)
        rep.warnings.push_back("short-time form used at kappa*tau=" + std::to_string(k * tau));
    return rep;
}

namespace transcribed {

namespace {
struct Ab {
    double A, B, l2sq;
};
Ab ab(const ReadoutParams& p) {
    const double k = p.kappa;
    const double tau = p.tau;
    const double A = 1.0 - 0.5 * k * tau - std::exp(-0.5 * k * tau) * std::cos(p.chi * tau);
    const double B = std::exp(-0.5 * k * tau) * std::sin(p.chi * tau) - p.chi * tau;
    const double l2 = p.chi * p.chi + 0.25 * k * k;
    return {A, B, l2 * l2};
}
}  // namespace

double signal_mean(const ReadoutParams& p) {
    const auto q = thermal_qubit(p);
    const auto [A, B, l2sq] = ab(p);
    const double k = p.kappa;
    const double chi = p.chi;
    const double vt = p.theta - p.varphi;
    const double pre = std::pow(k, 1.5) * p.alpha_in / l2sq;
    return std::sqrt(k) * 4.0 * p.alpha_in * p.tau * std::cos(vt) +
           pre * (2.0 * A * (chi * chi - 0.25 * k * k) - 2.0 * B * chi * k) * std::cos(vt) -
           pre * (2.0 * A * k * chi + 2.0 * B * (chi * chi - 0.25 * k * k)) * std::sin(vt) * q.sigma_z_mean;
}

double mu_sin_phi(const ReadoutParams& p) {
    const auto [A, B, l2sq] = ab(p);
    const double k = p.kappa;
    const double chi = p.chi;
    return std::pow(k, 1.5) * p.alpha_in * (2.0 * A * k * chi + 2.0 * B * (chi * chi - 0.25 * k * k)) *
           std::sin(p.phi) / l2sq;
}

double delta_M_sq(const ReadoutParams& p) {
    const auto q = thermal_qubit(p);
    const double sz = q.sigma_z_mean;
    const double kt = p.kappa * p.tau;
    const double ct = p.chi * p.tau;
    const double psi = std::atan(2.0 * p.chi / p.kappa);
    const double d = 2.0 * p.varphi - p.phi;
    using std::cos;
    using std::sin;
    const double pre = cos(psi) * sin(2.0 * psi);
    const double curly =
        3.0 * cos(p.phi - 2.0 * p.varphi) -
        (3.0 - 2.0 * kt) * (cos(d) * cos(4.0 * psi) + sin(4.0 * psi) * sin(d) * sz) -
        16.0 * std::exp(-0.5 * kt) * pre * (cos(3.0 * psi) * sin(d + ct) * sz + sin(3.0 * psi) * cos(d + ct)) +
        4.0 * std::exp(-kt) * pre * (cos(3.0 * psi) * sin(d + 2.0 * ct) * sz + sin(3.0 * psi) * cos(d + 2.0 * ct)) +
        6.0 * sin(2.0 * psi) * cos(d) * sin(4.0 * psi) + 6.0 * sin(2.0 * psi) * sin(d) * cos(4.0 * psi) * sz;
    return kt * std::cosh(2.0 * p.r) + 0.5 * std::sinh(2.0 * p.r) * curly;
}

}  // namespace transcribed

}  // namespace thermo::ies
