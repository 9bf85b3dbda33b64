#include <doctest.h>

#include <cmath>
#include <numbers>

#include "thermo/errors.hpp"
#include "thermo/ies.hpp"
#include "thermo/oracle.hpp"

using namespace thermo;
using doctest::Approx;
using cplx = std::complex<double>;

TEST_CASE("no drive, no mean") {
    ReadoutParams p;
    p.alpha_in = 0.0;
    p.r = 1.0;
    CHECK(oracle::integrated_quadrature_mean(oracle::ies_readout_spec(p), +1, p.tau) == 0.0);
}

TEST_CASE("driven damped cavity") {
    ReadoutParams p;
    p.chi = 0.0;
    p.r = 0.0;
    p.tau = 0.07;
    p.theta = 0.3;
    p.varphi = 1.1;
    const double k = p.kappa, t = p.tau;
    const cplx L(-k / 2, 0), beta = std::polar(p.alpha_in, p.theta), u = std::polar(1.0, -p.varphi);
    const cplx a_ss = std::sqrt(k) * beta / L;
    const double expect =
        2 * std::sqrt(k) * std::real(u * (beta * t + std::sqrt(k) * a_ss * (t - (std::exp(L * t) - 1.0) / L)));
    CHECK(oracle::integrated_quadrature_mean(oracle::ies_readout_spec(p), +1, t) == Approx(expect).epsilon(1e-8));
}

TEST_CASE("oracle reproduces the closed-form branch moments") {
    ReadoutParams p;
    p.r = 0.9;
    p.phi = 2.2;
    p.theta = 0.4;
    p.varphi = 0.1;
    p.tau = 0.13;
    const auto spec = oracle::ies_readout_spec(p);
    for (int s : {+1, -1}) {
        const auto b = ies::branch_moments(p, s);
        CHECK(oracle::integrated_quadrature_mean(spec, s, p.tau) == Approx(b.mean).epsilon(1e-6));
        CHECK(oracle::integrated_quadrature_variance(spec, s, p.tau) == Approx(b.variance).epsilon(1e-5));
    }
}

TEST_CASE("vacuum floor and stationary accumulation") {
    ReadoutParams p;
    p.r = 0.0;
    p.tau = 1000.0 / p.kappa;
    const auto spec = oracle::ies_readout_spec(p);
    const double v = oracle::integrated_quadrature_variance(spec, +1, p.tau);
    CHECK(v / (p.kappa * p.tau) == Approx(1.0).epsilon(1e-2));

    ReadoutParams q;
    q.r = 1.0;
    q.tau = 200.0 / q.kappa;
    const auto s2 = oracle::ies_readout_spec(q);
    const double v1 = oracle::integrated_quadrature_variance(s2, +1, q.tau);
    const double v2 = oracle::integrated_quadrature_variance(s2, +1, 2 * q.tau);
    CHECK(v2 / v1 == Approx(2.0).epsilon(1e-2));
}

TEST_CASE("step halving") {
    ReadoutParams p;
    p.r = 0.5;
    p.tau = 0.3;
    const auto spec = oracle::ies_readout_spec(p);
    const long n = oracle::default_steps(spec, +1, p.tau);
    const auto a = oracle::propagate(spec, +1, p.tau, n);
    const auto b = oracle::propagate(spec, +1, p.tau, 2 * n);
    CHECK(std::abs(a.m2(2, 2) - b.m2(2, 2)) <= 1e-6 * std::abs(b.m2(2, 2)));
    CHECK(std::abs(a.m1(2) - b.m1(2)) <= 1e-7 * std::abs(b.m1(2)));
    CHECK(b.t == p.tau);
    CHECK_THROWS_AS(oracle::quadrature_moments(spec, +1, p.tau, 0.0), IntegrationError);
}

TEST_CASE("mean is linear in the drive") {
    ReadoutParams p;
    p.r = 0.7;
    p.tau = 0.2;
    const double m1 = oracle::integrated_quadrature_mean(oracle::ies_readout_spec(p), -1, p.tau);
    p.alpha_in *= 3;
    const double m3 = oracle::integrated_quadrature_mean(oracle::ies_readout_spec(p), -1, p.tau);
    CHECK(m3 == Approx(3 * m1).epsilon(1e-12));
}

TEST_CASE("Lyapunov solution for a decoupled cavity") {
    ReadoutParams p;
    p.chi = 0.0;
    p.r = 0.0;
    auto cov = oracle::lyapunov_covariance(oracle::bath_fluctuation_spec(p, 0.0));
    CHECK(std::abs(cov(1, 0)) < 1e-14);
    CHECK(std::abs(cov(0, 0)) < 1e-14);
    CHECK(cov(0, 1).real() == Approx(1.0));

    p.r = 1.3;
    cov = oracle::lyapunov_covariance(oracle::bath_fluctuation_spec(p, 0.4));
    CHECK(cov(1, 0).real() == Approx(std::sinh(1.3) * std::sinh(1.3)).epsilon(1e-12));
}

TEST_CASE("steady quadratures respect the uncertainty relation") {
    for (double r : {0.0, 0.5, 2.0}) {
        ReadoutParams p;
        p.r = r;
        p.n_qubits = 300;
        const auto cov = oracle::lyapunov_covariance(oracle::bath_fluctuation_spec(p, 1.0));
        for (int k = 0; k < 32; ++k) {
            const double a = std::numbers::pi * k / 32;
            CHECK(oracle::quadrature_variance(cov, a) * oracle::quadrature_variance(cov, a + std::numbers::pi / 2) >=
                  1.0 - 1e-12);
        }
    }
}

TEST_CASE("unstable drift is rejected") {
    ReadoutParams p;
    auto spec = oracle::bath_fluctuation_spec(p, 0.0);
    spec.drift(0, 0) = cplx(1.0, 0.0);
    CHECK_THROWS_AS(oracle::lyapunov_covariance(spec), InstabilityError);
}

TEST_CASE("transformed input noise is vacuum under matched phases") {
    ReadoutParams p;
    p.Omega = 2.0;
    p.theta_prime = 1.0;
    p.r = std::atanh(0.8);
    p.phi = p.theta_prime - std::numbers::pi;
    const auto n = oracle::bogoliubov_input_noise(p);
    CHECK(std::abs(n(0, 0)) < 1e-12);
    CHECK(std::abs(n(0, 1) - 1.0) < 1e-12);
    CHECK(std::abs(n(1, 0)) < 1e-12);
}
