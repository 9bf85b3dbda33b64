#include <doctest.h>

#include <cmath>

#include "thermo/errors.hpp"
#include "thermo/model.hpp"

using namespace thermo;

TEST_CASE("thermal qubit at omega = T = 1") {
    ReadoutParams p;
    const auto q = thermal_qubit(p);
    const double e = std::exp(1.0);
    CHECK(q.sigma_z_mean == doctest::Approx((1 - e) / (1 + e)).epsilon(1e-14));
    CHECK(q.sigma_z_mean == doctest::Approx(-0.46212).epsilon(1e-5));
    CHECK(q.n_bose == doctest::Approx(0.58198).epsilon(1e-5));
    CHECK(q.d_n_dT == doctest::Approx(0.92068).epsilon(1e-5));
    CHECK(q.p_excited - q.p_ground == doctest::Approx(q.sigma_z_mean).epsilon(1e-14));
    CHECK(q.p_excited + q.p_ground == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("zero-temperature limit") {
    ReadoutParams p;
    p.temperature = 1e-3;
    const auto q = thermal_qubit(p);
    CHECK(q.sigma_z_mean == doctest::Approx(-1.0));
    CHECK(q.n_bose < 1e-300);
    CHECK(q.sigma_z_variance() >= 0.0);
}

TEST_CASE("analytic temperature derivatives match central differences") {
    for (double T : {0.2, 0.5, 1.0, 3.0, 20.0}) {
        ReadoutParams p;
        p.temperature = T;
        const double h = 1e-6 * T;
        ReadoutParams lo = p, hi = p;
        lo.temperature -= h;
        hi.temperature += h;
        const auto q = thermal_qubit(p);
        const double ds = (thermal_qubit(hi).sigma_z_mean - thermal_qubit(lo).sigma_z_mean) / (2 * h);
        const double dn = (thermal_qubit(hi).n_bose - thermal_qubit(lo).n_bose) / (2 * h);
        CHECK(q.d_sigma_z_dT == doctest::Approx(ds).epsilon(1e-8));
        CHECK(q.d_n_dT == doctest::Approx(dn).epsilon(1e-8));
        CHECK(q.sigma_z_mean > -1.0);
        CHECK(q.sigma_z_mean < 0.0);
        CHECK(q.d_sigma_z_dT > 0.0);
    }
}

TEST_CASE("thermal qubit rejects non-positive temperature and frequency") {
    ReadoutParams p;
    p.temperature = 0.0;
    CHECK_THROWS_AS(thermal_qubit(p), DomainError);
    p.temperature = 1.0;
    p.omega_q = -1.0;
    CHECK_THROWS_AS(thermal_qubit(p), DomainError);
}

TEST_CASE("parameter table") {
    ReadoutParams p;
    set_param(p, "kappa", 42.0);
    CHECK(get_param(p, "kappa") == 42.0);
    set_param(p, "n_qubits", 7.0);
    CHECK(p.n_qubits == 7);
    CHECK_THROWS_AS(set_param(p, "n_qubits", 2.5), DomainError);
    CHECK_THROWS_AS(set_param(p, "nope", 1.0), DomainError);
    CHECK_THROWS_AS(get_param(p, "nope"), DomainError);
    p.kappa = 0.0;
    CHECK_THROWS_AS(p.validate(), DomainError);
}
