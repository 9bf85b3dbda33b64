#include <doctest.h>

#include <cmath>

#include "thermo/bounds.hpp"
#include "thermo/errors.hpp"

using namespace thermo;
using doctest::Approx;

TEST_CASE("fisher information at omega = T = 1") {
    ReadoutParams p;
    CHECK(bounds::qfi(p) == Approx(0.19661).epsilon(1e-5));
    const double P = 1.0 / (1.0 + std::exp(1.0));
    CHECK(bounds::qfi(p) == Approx(P * (1 - P)).epsilon(1e-14));
}

TEST_CASE("fisher information vanishes at high temperature and scales as 1/c^2") {
    ReadoutParams p;
    p.temperature = 1e4;
    CHECK(bounds::qfi(p) < 1e-16);
    ReadoutParams a, b;
    a.omega_q = 1.3;
    a.temperature = 0.7;
    b.omega_q = 3 * 1.3;
    b.temperature = 3 * 0.7;
    CHECK(bounds::qfi(b) == Approx(bounds::qfi(a) / 9).epsilon(1e-13));
    a.temperature = -1;
    CHECK_THROWS_AS(bounds::qfi(a), DomainError);
}

TEST_CASE("optimal delta T") {
    ReadoutParams p;
    CHECK(bounds::optimal_delta_T(p) == Approx(2.2553).epsilon(1e-4));
    CHECK(bounds::optimal_delta_T(p) == Approx(std::sqrt(2.0) * std::sqrt(1 + std::cosh(1.0))).epsilon(1e-14));
    p.temperature = 0.01;
    CHECK(bounds::optimal_delta_T(p) > 1e10);
}

TEST_CASE("the printed prefactor is sqrt(2) times the exact bound") {
    ReadoutParams p;
    CHECK(bounds::printed_optimal_delta_T(p) / bounds::optimal_delta_T(p) == Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("cramer-rao saturation over T in [0.05, 50]") {
    ReadoutParams p;
    for (int i = 0; i < 200; ++i) {
        p.temperature = 0.05 * std::pow(1000.0, i / 199.0);
        const auto b = bounds::bound_report(p);
        CHECK(std::abs(b.optimal_dT * std::sqrt(b.qfi) - 1.0) <= 1e-12);
        CHECK(b.crb == Approx(b.optimal_dT).epsilon(1e-12));
    }
}

TEST_CASE("standard quantum limit") {
    ReadoutParams p;
    CHECK(bounds::sql_delta_T(p) == bounds::optimal_delta_T(p));
    p.n_qubits = 4;
    CHECK(bounds::sql_delta_T(p) == Approx(bounds::optimal_delta_T(p) / 2).epsilon(1e-15));
    p.n_qubits = 100;
    CHECK(bounds::sql_delta_T(p) == Approx(0.22553).epsilon(1e-4));
}
