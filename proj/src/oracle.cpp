#include "thermo/oracle.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "thermo/errors.hpp"
#include "thermo/ics.hpp"

namespace thermo::oracle {

namespace {

constexpr cplx I{0.0, 1.0};

Eigen::Matrix2cd squeezed_input(double r, double phi) {
    const cplx m = 0.5 * std::polar(1.0, phi) * std::sinh(2.0 * r);
    const double sh = std::sinh(r);
    const double ch = std::cosh(r);
    Eigen::Matrix2cd n;
    n << m, ch * ch, sh * sh, std::conj(m);
    return n;
}

// Readout through a single mode with input-output x_out = x_in + √κ x and Q = u x_out + h.c.
LinearSystemSpec readout_spec(double kappa, cplx u, cplx beta, const Eigen::Matrix2cd& noise) {
    const double sk = std::sqrt(kappa);
    LinearSystemSpec s;
    s.drift(0, 0) = -0.5 * kappa;
    s.drift(1, 1) = -0.5 * kappa;
    s.drift(2, 0) = kappa * u;
    s.drift(2, 1) = kappa * std::conj(u);
    s.source << -sk * beta, -sk * std::conj(beta), sk * 2.0 * std::real(u * beta);
    s.input_coupling(0, 0) = -sk;
    s.input_coupling(1, 1) = -sk;
    s.input_coupling(2, 0) = sk * u;
    s.input_coupling(2, 1) = sk * std::conj(u);
    s.noise_cov.topLeftCorner<2, 2>() = noise;
    s.scale = sk * std::abs(u) * (std::abs(beta) + 1.0) + kappa * std::norm(u);
    return s;
}

Mat3 vacuum_cov() {
    Mat3 c = Mat3::Zero();
    c(0, 1) = 1.0;
    return c;
}

}  // namespace

LinearSystemSpec ies_readout_spec(const ReadoutParams& p) {
    p.validate();
    const auto noise = squeezed_input(p.r, p.phi);
    auto s = readout_spec(p.kappa, std::polar(1.0, -p.varphi), p.alpha_in * std::polar(1.0, p.theta), noise);
    s.drift_sigma(0, 0) = -I * p.chi;
    s.drift_sigma(1, 1) = I * p.chi;
    s.cov0.topLeftCorner<2, 2>() = noise;
    return s;
}

Eigen::Matrix2cd bogoliubov_input_noise(const ReadoutParams& p) {
    const auto bp = ics::bogoliubov(p);
    const double ch = std::cosh(bp.r_c);
    const double sh = std::sinh(bp.r_c);
    const cplx e = std::polar(1.0, p.theta_prime);
    Eigen::Matrix2cd t;  // (b, b†) = t (a, a†)
    t << ch, e * sh, std::conj(e) * sh, ch;
    return t * squeezed_input(p.r, p.phi) * t.transpose();
}

LinearSystemSpec ics_readout_spec(const ReadoutParams& p) {
    p.validate();
    const auto bp = ics::bogoliubov(p);
    const double ch = std::cosh(bp.r_c);
    const double sh = std::sinh(bp.r_c);
    const cplx e = std::polar(1.0, p.theta_prime);
    const cplx alpha = p.alpha_in * std::polar(1.0, p.theta);
    const cplx beta = ch * alpha + e * sh * std::conj(alpha);
    const cplx u = ch * std::polar(1.0, -p.varphi) - sh * std::polar(1.0, -(p.theta_prime - p.varphi));
    auto s = readout_spec(p.kappa, u, beta, bogoliubov_input_noise(p));
    s.drift(0, 0) += -I * bp.omega_sq;
    s.drift(1, 1) += I * bp.omega_sq;
    s.drift_sigma(0, 0) = -I * bp.chi_sq;
    s.drift_sigma(1, 1) = I * bp.chi_sq;
    s.cov0 = vacuum_cov();
    return s;
}

LinearSystemSpec detuned_readout_spec(const ReadoutParams& p) {
    p.validate();
    auto s = readout_spec(p.kappa, std::polar(1.0, -p.varphi), p.alpha_in * std::polar(1.0, p.theta),
                          squeezed_input(p.r, p.phi));
    const cplx e = std::polar(1.0, p.theta_prime);
    s.drift(0, 0) += -I * p.Delta_c;
    s.drift(1, 1) += I * p.Delta_c;
    s.drift(0, 1) = -2.0 * I * p.Omega * e;
    s.drift(1, 0) = 2.0 * I * p.Omega * std::conj(e);
    s.drift_sigma(0, 0) = -I * p.chi;
    s.drift_sigma(1, 1) = I * p.chi;
    s.cov0 = vacuum_cov();
    return s;
}

MomentState propagate(const LinearSystemSpec& spec, int sigma, double tau, long steps) {
    MomentState st{spec.mean0, spec.cov0, 0.0};
    if (steps <= 0 || tau == 0.0) return st;
    const Mat3 F = spec.drift_at(sigma);
    const Mat3 Ft = F.transpose();
    const Mat3 D = spec.diffusion();
    const double h = tau / static_cast<double>(steps);

    auto fm = [&](const Vec3& m) -> Vec3 { return F * m + spec.source; };
    auto fs = [&](const Mat3& S) -> Mat3 { return F * S + S * Ft + D; };

    for (long i = 0; i < steps; ++i) {
        const Vec3 k1 = fm(st.m1);
        const Vec3 k2 = fm(st.m1 + 0.5 * h * k1);
        const Vec3 k3 = fm(st.m1 + 0.5 * h * k2);
        const Vec3 k4 = fm(st.m1 + h * k3);
        st.m1 += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        const Mat3 l1 = fs(st.m2);
        const Mat3 l2 = fs(st.m2 + 0.5 * h * l1);
        const Mat3 l3 = fs(st.m2 + 0.5 * h * l2);
        const Mat3 l4 = fs(st.m2 + h * l3);
        st.m2 += (h / 6.0) * (l1 + 2.0 * l2 + 2.0 * l3 + l4);
    }
    st.t = tau;
    return st;
}

long default_steps(const LinearSystemSpec& spec, int sigma, double tau) {
    if (tau <= 0.0) return 0;
    const Mat3 F = spec.drift_at(sigma);
    double rate = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) rate = std::max(rate, std::abs(F(i, j)));
    const double h = std::min(rate > 0.0 ? 1.0 / rate : tau, tau) / 200.0;
    return static_cast<long>(std::ceil(tau / h));
}

QuadratureMoments quadrature_moments(const LinearSystemSpec& spec, int sigma, double tau, double rtol) {
    if (sigma != 1 && sigma != -1) throw DomainError("qubit branch must be +1 or -1");
    if (tau < 0.0) throw DomainError("tau must be non-negative");
    long n = default_steps(spec, sigma, tau);
    if (n == 0) return {spec.mean0(2).real(), spec.cov0(2, 2).real(), 0.0};

    auto eval = [&](long steps) {
        const auto st = propagate(spec, sigma, tau, steps);
        return std::pair{st.m1(2).real(), st.m2(2, 2).real()};
    };
    auto coarse = eval(n);
    for (int attempt = 0; attempt < 5; ++attempt) {
        const auto fine = eval(2 * n);
        const double em = std::abs(fine.first - coarse.first) / 15.0;
        const double ev = std::abs(fine.second - coarse.second) / 15.0;
        const double floor = spec.scale * std::max(tau, 1e-300);
        if (em <= rtol * std::max(std::abs(fine.first), 1e-6 * floor) &&
            ev <= rtol * std::max(std::abs(fine.second), 1e-6 * floor)) {
            return {fine.first + (fine.first - coarse.first) / 15.0,
                    fine.second + (fine.second - coarse.second) / 15.0, std::max(em, ev)};
        }
        coarse = fine;
        n *= 2;
    }
    throw IntegrationError("oracle: step halving did not reach the requested tolerance");
}

double integrated_quadrature_mean(const LinearSystemSpec& spec, int sigma, double tau) {
    return quadrature_moments(spec, sigma, tau).mean;
}

double integrated_quadrature_variance(const LinearSystemSpec& spec, int sigma, double tau) {
    return quadrature_moments(spec, sigma, tau).variance;
}

QuadratureMoments thermal_quadrature_moments(const LinearSystemSpec& spec, const ReadoutParams& params, double tau) {
    const auto q = thermal_qubit(params);
    const auto e = quadrature_moments(spec, +1, tau);
    const auto g = quadrature_moments(spec, -1, tau);
    const double pe = q.p_excited;
    const double pg = q.p_ground;
    QuadratureMoments out;
    out.mean = pe * e.mean + pg * g.mean;
    out.variance = pe * (e.mean - out.mean) * (e.mean - out.mean) + pg * (g.mean - out.mean) * (g.mean - out.mean) +
                   pe * e.variance + pg * g.variance;
    out.error_estimate = std::max(e.error_estimate, g.error_estimate);
    return out;
}

double delta_T_numeric(const ReadoutParams& params, LinearSystemSpec (*make_spec)(const ReadoutParams&)) {
    const auto spec = make_spec(params);
    const auto e = quadrature_moments(spec, +1, params.tau);
    const auto g = quadrature_moments(spec, -1, params.tau);
    auto mean_at = [&](double T) {
        ReadoutParams p = params;
        p.temperature = T;
        const auto q = thermal_qubit(p);
        return q.p_excited * e.mean + q.p_ground * g.mean;
    };
    const double T = params.temperature;
    const double h = 1e-5 * T;
    const double slope = (mean_at(T + h) - mean_at(T - h)) / (2.0 * h);
    const auto total = thermal_quadrature_moments(spec, params, params.tau);
    if (slope == 0.0) throw DegenerateSignalError("oracle: no temperature signal");
    return std::sqrt(total.variance) / std::abs(slope);
}

LinearSystemSpec bath_fluctuation_spec(const ReadoutParams& p, double squeeze_phase) {
    p.validate();
    const auto q = thermal_qubit(p);
    const double n = q.n_bose;
    const double N = static_cast<double>(p.n_qubits);
    const double wp = N * p.chi / (2.0 * n + 1.0);
    const double gamma = 4.0 * p.Gamma * n + 2.0 * p.Gamma;
    const cplx lam(-0.5 * p.kappa, wp);
    const double sk = std::sqrt(p.kappa);

    LinearSystemSpec s;
    s.drift << lam, 0.0, -I * N * p.chi,
               0.0, std::conj(lam), I * N * p.chi,
               0.0, 0.0, -gamma;
    s.input_coupling.diagonal() << -sk, -sk, 1.0;
    s.noise_cov.topLeftCorner<2, 2>() = squeezed_input(p.r, squeeze_phase);
    s.noise_cov(2, 2) = 8.0 * p.Gamma * (1.0 + n + n / (1.0 + 2.0 * n));
    return s;
}

Mat3 lyapunov_covariance(const LinearSystemSpec& spec) {
    const Mat3 F = spec.drift;
    const Eigen::ComplexEigenSolver<Mat3> eig(F, false);
    for (int i = 0; i < 3; ++i)
        if (!(eig.eigenvalues()(i).real() < 0.0)) throw InstabilityError("lyapunov: drift is not stable");

    using Mat9 = Eigen::Matrix<cplx, 9, 9>;
    using Vec9 = Eigen::Matrix<cplx, 9, 1>;
    Mat9 A = Mat9::Zero();
    // column-major vec: vec(FΣ) = (I⊗F) vecΣ, vec(ΣFᵀ) = (F⊗I) vecΣ
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                A(3 * b + a, 3 * b + c) += F(a, c);
                A(3 * b + a, 3 * c + a) += F(b, c);
            }
    const Mat3 D = spec.diffusion();
    const Vec9 rhs = -Eigen::Map<const Vec9>(D.data());
    const Vec9 x = A.fullPivLu().solve(rhs);
    return Eigen::Map<const Mat3>(x.data());
}

double quadrature_variance(const Mat3& cov, double angle) {
    const cplx e = std::polar(1.0, -2.0 * angle);
    return std::real(e * cov(0, 0) + std::conj(e) * cov(1, 1) + cov(0, 1) + cov(1, 0));
}

double bath_signal(const ReadoutParams& params) {
    auto mean_at = [&](double T) {
        ReadoutParams p = params;
        p.temperature = T;
        const auto q = thermal_qubit(p);
        const double wp = static_cast<double>(p.n_qubits) * p.chi * -q.sigma_z_mean;
        const cplx lam(-0.5 * p.kappa, wp);
        return std::sqrt(p.kappa) * p.alpha_in / lam;
    };
    const double T = params.temperature;
    const double h = 1e-5 * T;
    return 2.0 * std::abs((mean_at(T + h) - mean_at(T - h)) / (2.0 * h));
}

}  // namespace thermo::oracle
