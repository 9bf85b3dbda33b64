#include "thermo/ics.hpp"

#include <cmath>
#include <numbers>

#include "thermo/errors.hpp"

namespace thermo::ics {

BogoliubovParams bogoliubov(const ReadoutParams& p) {
    if (p.Delta_c == 0.0) throw DomainError("bogoliubov: Delta_c must be nonzero");
    const double ratio = 2.0 * p.Omega / p.Delta_c;
    if (!(std::abs(ratio) < 1.0)) throw DomainError("bogoliubov: |2 Omega| >= |Delta_c|, two-photon drive unstable");

    BogoliubovParams bp;
    bp.r_c = std::atanh(ratio);
    bp.omega_sq = std::sqrt(p.Delta_c * p.Delta_c - 4.0 * p.Omega * p.Omega);
    bp.vartheta_b = p.theta_prime;

    const double detuning = p.Delta_q - bp.omega_sq;
    if (std::abs(detuning) <= 1e-12 * std::max(1.0, bp.omega_sq))
        throw DomainError("bogoliubov: Delta_q = omega_sq is a pole of chi_sq");
    const double ch = std::cosh(bp.r_c);
    const double sh = std::sinh(bp.r_c);
    const double inner = ch + 2.0 * bp.omega_sq * ch / detuning;
    if (sh != 0.0 && std::abs(inner) <= 1e-12 * ch)
        throw DomainError("bogoliubov: Delta_q = -omega_sq is a pole of chi_sq");
    bp.chi_sq = p.chi * (ch + (sh == 0.0 ? 0.0 : sh * sh / inner));
    return bp;
}

ReadoutParams matched_scenario(const ReadoutParams& params) {
    ReadoutParams p = params;
    p.r = bogoliubov(params).r_c;
    p.phi = p.theta_prime - std::numbers::pi;
    p.theta = 0.5 * p.theta_prime;
    p.varphi = p.theta;
    return p;
}

double denominator(double k, double w, double c) {
    const double d = w * w - c * c;
    return k * k * k * k + 16.0 * d * d + 8.0 * k * k * (w * w + c * c);
}

std::vector<BracketTerm> odd_bracket(double kd, double wd, double cd, double td) {
    const Real k = kd, w = wd, c = cd, t = td;
    const Real k2 = k * k, k4 = k2 * k2, w2 = w * w, c2 = c * c;
    const Real w4 = w2 * w2, c4 = c2 * c2;
    return {
        {4.0 * w * c * (k2 + 4.0 * w2) * (k2 * k * t - 6.0 * k2 + 8.0 * w2 + 4.0 * k * t * w2), false, Trig::One},
        {32.0 * w * c2 * c * (k2 * k * t - 2.0 * k2 - 8.0 * w2 - 4.0 * k * t * w2), false, Trig::One},
        {64.0 * w * c4 * c * (2.0 + k * t), false, Trig::One},
        {8.0 * w * c * (3.0 * k4 - 16.0 * w4 - 16.0 * c4 + 32.0 * w2 * c2 + 8.0 * k2 * w2 + 8.0 * k2 * c2), true,
         Trig::CosCos},
        {4.0 * w * k * (k4 + 16.0 * w4 + 8.0 * k2 * w2 - 8.0 * k2 * c2 + 32.0 * w2 * c2 - 48.0 * c4), true,
         Trig::CosSin},
        {4.0 * k * c * (k4 + 8.0 * k2 * c2 - 8.0 * k2 * w2 + 16.0 * c4 + 32.0 * w2 * c2 - 48.0 * w4), true,
         Trig::SinCos},
        {k4 * k2 + 4.0 * k4 * w2 + 4.0 * k4 * c2 - 64.0 * w4 * w2 - 64.0 * c4 * c2 + 64.0 * w2 * c4 + 64.0 * w4 * c2 -
             16.0 * k2 * w4 - 16.0 * k2 * c4 + 160.0 * k2 * c2 * w2,
         true, Trig::SinSin},
    };
}

std::vector<BracketTerm> even_bracket(double kd, double wd, double cd, double td) {
    const Real k = kd, w = wd, c = cd, t = td;
    const Real k2 = k * k, k4 = k2 * k2, w2 = w * w, c2 = c * c;
    const Real w4 = w2 * w2, c4 = c2 * c2;
    const Real d = w2 - c2;
    const Real big = (4.0 * w2 + k2) * (4.0 * w2 + k2) - 16.0 * c4;
    const Real pre = 16.0 * k * c;
    return {
        {(16.0 * d * d - k4) *
             (k4 * t - 4.0 * k2 * k + 16.0 * t * d * d - 16.0 * k * (w2 + c2) + 8.0 * k2 * t * (w2 + c2)),
         false, Trig::One},
        {pre * 32.0 * k2 * w2 * c, false, Trig::One},
        {-4.0 * k * big * (k2 - 4.0 * w2 + 4.0 * c2) + pre * (-32.0 * k2 * w2 * c), true, Trig::CosCos},
        {16.0 * k2 * w * big + pre * (-8.0 * k * w * c * (k2 - 4.0 * w2 + 4.0 * c2)), true, Trig::SinCos},
        {pre * k * (k4 + 8.0 * k2 * c2 - 8.0 * k2 * w2 + 16.0 * c4 + 32.0 * w2 * c2 - 48.0 * w4), true,
         Trig::CosSin},
        {pre * (-2.0 * w) * (3.0 * k4 - 16.0 * w4 - 16.0 * c4 + 32.0 * w2 * c2 + 8.0 * k2 * w2 + 8.0 * k2 * c2),
         true, Trig::SinSin},
    };
}

double evaluate(const std::vector<BracketTerm>& terms, double kd, double wd, double cd, double td) {
    const Real k = kd, w = wd, c = cd, t = td;
    const Real decay = std::exp(-0.5L * k * t);
    const Real cw = std::cos(w * t), sw = std::sin(w * t);
    const Real cc = std::cos(c * t), sc = std::sin(c * t);
    Real sum = 0.0;
    for (const auto& term : terms) {
        Real trig = 1.0;
        switch (term.trig) {
            case Trig::One: break;
            case Trig::CosCos: trig = cw * cc; break;
            case Trig::CosSin: trig = cw * sc; break;
            case Trig::SinCos: trig = sw * cc; break;
            case Trig::SinSin: trig = sw * sc; break;
        }
        sum += term.coefficient * trig * (term.decays ? decay : 1.0);
    }
    return static_cast<double>(sum);
}

double nu(const ReadoutParams& p, const BogoliubovParams& bp) {
    p.validate();
    const double k = p.kappa, w = bp.omega_sq, c = bp.chi_sq, t = p.tau;
    const double D = denominator(k, w, c);
    return 8.0 * p.alpha_in * std::pow(k, 1.5) * evaluate(odd_bracket(k, w, c, t), k, w, c, t) / (D * D);
}

double signal_mean_ics(const ReadoutParams& p, const BogoliubovParams& bp) {
    p.validate();
    const auto q = thermal_qubit(p);
    const double k = p.kappa, w = bp.omega_sq, c = bp.chi_sq, t = p.tau;
    const double D = denominator(k, w, c);
    const double even = 2.0 * p.alpha_in * std::sqrt(k) * evaluate(even_bracket(k, w, c, t), k, w, c, t) / (D * D);
    return even + q.sigma_z_mean * nu(p, bp);
}

double noise_var(const ReadoutParams& p, const BogoliubovParams& bp) {
    const auto q = thermal_qubit(p);
    const double v = nu(p, bp);
    return v * v * q.sigma_z_variance() + p.kappa * p.tau * std::exp(-2.0 * p.r);
}

UncertaintyReport delta_T_ics(const ReadoutParams& p) {
    const auto bp = bogoliubov(p);
    const auto q = thermal_qubit(p);
    const double v = nu(p, bp);
    const double slope = std::abs(v * q.d_sigma_z_dT);
    if (!(slope > 0.0)) throw DegenerateSignalError("ics: nu = 0, temperature decoupled from the output");
    return {std::sqrt(noise_var(p, bp)) / slope, Formula::IcsFull, {}};
}

double nu_steady(const ReadoutParams& p, const BogoliubovParams& bp) {
    const double k = p.kappa;
    return 32.0 * p.alpha_in * bp.omega_sq * p.tau * bp.chi_sq * std::pow(k, 2.5) /
           denominator(k, bp.omega_sq, bp.chi_sq);
}

double nu_short_time(const ReadoutParams& p, const BogoliubovParams& bp) {
    return p.alpha_in * std::pow(p.kappa, 1.5) * bp.omega_sq * bp.chi_sq * std::pow(p.tau, 4) / 6.0;
}

}  // namespace thermo::ics
