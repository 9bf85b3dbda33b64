#include <doctest.h>

#include <cmath>
#include <numbers>

#include "thermo/bath.hpp"
#include "thermo/cli/validate.hpp"
#include "thermo/errors.hpp"
#include "thermo/oracle.hpp"

using namespace thermo;
using doctest::Approx;

namespace {

ReadoutParams fig2(std::int64_t n, double r) {
    auto p = bath::fig2_params();
    p.n_qubits = n;
    p.r = r;
    return p;
}

}  // namespace

TEST_CASE("decoupled cavity") {
    auto p = fig2(1, 0.0);
    p.chi = 0.0;
    CHECK(bath::steady_state(p).var_Q == Approx(1.0).epsilon(1e-15));
    CHECK(bath::steady_state(p).signal == 0.0);
    CHECK_THROWS_AS(bath::delta_T_bath(p), DegenerateSignalError);

    p.r = 0.8;
    const auto st = bath::steady_state(p);
    CHECK(st.fluct_n == Approx(std::sinh(0.8) * std::sinh(0.8)));
    CHECK(st.var_Q == Approx(std::exp(-1.6)).epsilon(1e-12));
}

TEST_CASE("steady state at the fig2 point matches the Lyapunov oracle") {
    const auto p = fig2(1, 0.0);
    const auto st = bath::steady_state(p);
    const auto cov = oracle::lyapunov_covariance(oracle::bath_fluctuation_spec(p, st.squeeze_phase));
    CHECK(st.var_Q == Approx(oracle::quadrature_variance(cov, std::numbers::pi / 2)).epsilon(1e-6));
    CHECK(st.var_Q == Approx(1.00146701966752).epsilon(1e-10));
    CHECK(st.signal == Approx(0.340338179299829).epsilon(1e-10));
    CHECK(st.sigma_z_mean_bath == Approx(-1.0 / (2 * thermal_qubit(p).n_bose + 1)));
    CHECK(st.fluct_n >= 0.0);
}

TEST_CASE("signal against the derivative of the steady-state quadrature" * doctest::may_fail()) {
    const auto p = fig2(1, 0.0);
    CHECK(bath::steady_state(p).signal == Approx(oracle::bath_signal(p)).epsilon(1e-6));
}

TEST_CASE("the signal carries a factor (2n+1)/2 over the quadrature derivative") {
    for (double T : {0.5, 1.0, 3.0}) {
        auto p = fig2(3, 0.0);
        p.temperature = T;
        const double n = thermal_qubit(p).n_bose;
        CHECK(bath::steady_state(p).signal / oracle::bath_signal(p) == Approx((2 * n + 1) / 2).epsilon(1e-8));
    }
}

TEST_CASE("fluctuations match the Lyapunov oracle on random points") {
    for (const auto& p : cli::bath_random_grid(17, 20)) {
        const auto st = bath::steady_state(p, p.phi);
        const auto cov = oracle::lyapunov_covariance(oracle::bath_fluctuation_spec(p, p.phi));
        CHECK(st.fluct_aa.real() == Approx(cov(0, 0).real()).epsilon(1e-6));
        CHECK(st.fluct_aa.imag() == Approx(cov(0, 0).imag()).epsilon(1e-6));
        CHECK(st.fluct_n == Approx(cov(1, 0).real()).epsilon(1e-6));
        CHECK(st.var_Q == Approx(oracle::quadrature_variance(cov, std::numbers::pi / 2)).epsilon(1e-6));
    }
}

TEST_CASE("the default squeeze phase minimises var_Q") {
    const auto p = fig2(1000, 1.0);
    const double best = bath::steady_state(p).var_Q;
    for (int k = 0; k < 64; ++k) CHECK(bath::steady_state(p, 2 * std::numbers::pi * k / 64).var_Q >= best - 1e-12);
}

TEST_CASE("delta T at N = 1, r = 0 and the weak-coupling form") {
    const auto p = fig2(1, 0.0);
    const auto d = bath::delta_T_bath(p);
    CHECK(d.delta_T == Approx(2.94).epsilon(1e-3));
    CHECK(d.delta_T == Approx(2.94040839929084).epsilon(1e-10));
    CHECK(d.delta_T == Approx(bath::heisenberg_limit(p).delta_T).epsilon(1e-2));
}

TEST_CASE("delta T decreases with r at small N") {
    double prev = INFINITY;
    for (double r : {0.0, 0.5, 1.0, 1.5, 2.0}) {
        const double d = bath::delta_T_bath(fig2(1, r)).delta_T;
        CHECK(d < prev);
        prev = d;
    }
}

TEST_CASE("delta T is inverse in the drive amplitude") {
    auto p = fig2(10, 1.0);
    const double d = bath::delta_T_bath(p).delta_T;
    p.alpha_in *= 2;
    CHECK(bath::delta_T_bath(p).delta_T == Approx(d / 2).epsilon(1e-13));
}

TEST_CASE("weak-coupling form") {
    const double h = bath::heisenberg_limit(fig2(3, 0.4)).delta_T;
    CHECK(bath::heisenberg_limit(fig2(6, 0.4)).delta_T == Approx(h / 2).epsilon(1e-14));
    CHECK(bath::heisenberg_limit(fig2(3, 0.4 + std::log(2.0))).delta_T == Approx(h / 2).epsilon(1e-14));
    CHECK_FALSE(bath::heisenberg_limit(fig2(3, 0.4)).warnings.empty());
    auto q = fig2(1, 0.0);
    q.kappa = 1e4;
    CHECK(bath::heisenberg_limit(q).warnings.empty());
}

TEST_CASE("strong-coupling form") {
    const double s = bath::strong_coupling_limit(fig2(1000, 0.5)).delta_T;
    CHECK(bath::strong_coupling_limit(fig2(2000, 0.5)).delta_T == Approx(2 * s).epsilon(1e-14));
    CHECK(bath::strong_coupling_limit(fig2(1000, 0.6)).delta_T > s);
    CHECK(bath::strong_coupling_limit(fig2(10000, 0.0)).delta_T == Approx(1.875).epsilon(1e-3));
    CHECK_FALSE(bath::strong_coupling_limit(fig2(100, 0.0)).warnings.empty());
}

TEST_CASE("strong-coupling form against the full expression" * doctest::may_fail()) {
    CHECK(bath::delta_T_bath(fig2(10000, 0.0)).delta_T == Approx(1.88).epsilon(1e-2));
    CHECK(bath::delta_T_bath(fig2(100000, 0.0)).delta_T ==
          Approx(bath::strong_coupling_limit(fig2(100000, 0.0)).delta_T).epsilon(1e-2));
}

TEST_CASE("weak-coupling form against the full expression at N = 2, r = 1" * doctest::may_fail()) {
    const auto p = fig2(2, 1.0);
    CHECK(bath::delta_T_bath(p).delta_T == Approx(bath::heisenberg_limit(p).delta_T).epsilon(1e-2));
}

TEST_CASE("regime sandwich") {
    for (const auto& p : cli::bath_random_grid(23, 40)) {
        const auto ratios = bath::regime_ratios(p);
        const double full = bath::delta_T_bath(p).delta_T;
        if (ratios.weak >= 100.0) CHECK(full == Approx(bath::heisenberg_limit(p).delta_T).epsilon(1e-2));
    }
}

TEST_CASE("Heisenberg slope in the weak-coupling regime") {
    auto p = fig2(1, 0.0);
    p.kappa = 1e4;
    const double d1 = bath::delta_T_bath(p).delta_T;
    p.n_qubits = 8;
    const double d8 = bath::delta_T_bath(p).delta_T;
    CHECK(std::log(d8 / d1) / std::log(8.0) == Approx(-1.0).epsilon(1e-2));
}

TEST_CASE("fig2 sweep structure") {
    const auto grid = bath::fig2_n_grid();
    CHECK(grid.front() == 1);
    CHECK(grid.back() == 1000000);
    CHECK(std::adjacent_find(grid.begin(), grid.end()) == grid.end());

    const auto res = bath::fig2_sweep(bath::fig2_params(), grid, {0.0, 1.0, 2.0});
    REQUIRE(res.minima.size() == 3);
    for (const auto& m : res.minima) {
        CHECK(m.single_minimum);
        CHECK(m.n_star > grid.front());
        CHECK(m.n_star < grid.back());
    }
    CHECK(res.minima[0].n_star == 56);
    CHECK(res.minima[1].n_star == 32);
    CHECK(res.minima[2].n_star == 16);

    for (std::size_t i = 0; i < grid.size() && grid[i] <= 10; ++i) {
        const double d0 = res.rows[i].delta_T;
        const double d1 = res.rows[grid.size() + i].delta_T;
        const double d2 = res.rows[2 * grid.size() + i].delta_T;
        CHECK(d2 < d1);
        CHECK(d1 < d0);
    }
    CHECK(res.rows[2 * grid.size() - 1].delta_T < res.rows[3 * grid.size() - 1].delta_T);
}

TEST_CASE("fig2 sweep flags failing points") {
    auto p = bath::fig2_params();
    p.chi = 0.0;
    const auto res = bath::fig2_sweep(p, {1, 2}, {0.0});
    CHECK_FALSE(res.rows[0].error.empty());
    CHECK_THROWS_AS(bath::fig2_sweep(p, {}, {0.0}), DomainError);
}
