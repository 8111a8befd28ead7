#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paramres/errors.hpp"
#include "paramres/oscillator.hpp"

#include <cmath>
#include <random>

using namespace paramres;

TEST_CASE("params_from_modal: reference parameter set") {
    const auto p = params_from_modal(0.0098, 3.8072, 0.5, 6.9115);
    CHECK(p.sigma == doctest::Approx(-0.0373).epsilon(1e-3));
    CHECK(p.omega == doctest::Approx(3.8070).epsilon(1e-4));
    CHECK(p.sigma == -0.0098 * 3.8072); // exact by definition
    CHECK(p.omega == 3.8072 * std::sqrt(1.0 - 0.0098 * 0.0098));
    CHECK(p.k_amp == 0.5);
    CHECK(p.cap_omega == 6.9115);
}

TEST_CASE("params_from_modal: undamped and strongly damped") {
    const auto undamped = params_from_modal(0.0, 1.0, 0.0, 0.0);
    CHECK(undamped.sigma == 0.0);
    CHECK(undamped.omega == 1.0);

    const auto heavy = params_from_modal(0.5, 2.0, 0.1, 1.0);
    CHECK(heavy.sigma == doctest::Approx(-1.0));
    CHECK(heavy.omega == doctest::Approx(2.0 * std::sqrt(0.75)));
}

TEST_CASE("params_from_modal: validation") {
    CHECK_THROWS_AS(params_from_modal(1.0, 1.0, 0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(params_from_modal(-0.1, 1.0, 0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(params_from_modal(0.1, 0.0, 0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(params_from_modal(0.1, -2.0, 0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(params_from_modal(0.1, 1.0, -0.5, 0.0), ValidationError);
    CHECK_THROWS_AS(params_from_modal(0.1, 1.0, 0.5, -1.0), ValidationError);
}

TEST_CASE("a0_from_initial: reference values") {
    const auto p = params_from_modal(0.0098, 3.8072, 0.5, 6.9115);
    const auto ic = a0_from_initial(1.0, 0.0, p);
    CHECK(ic.a_re0 == 0.5);
    CHECK(ic.a_im0 == doctest::Approx(-0.004900).epsilon(1e-3));

    const auto zero = a0_from_initial(0.0, 0.0, p);
    CHECK(zero.a_re0 == 0.0);
    CHECK(zero.a_im0 == 0.0);

    // x0 = 2, v0 = 2 sigma makes A0 purely real by construction
    const auto real_a0 = a0_from_initial(2.0, 2.0 * p.sigma, p);
    CHECK(real_a0.a_re0 == 1.0);
    CHECK(real_a0.a_im0 == 0.0);
}

TEST_CASE("a0_from_initial: omega = 0 is singular") {
    OscillatorParams p;
    p.omega = 0.0;
    CHECK_THROWS_AS(a0_from_initial(1.0, 0.0, p), SingularityError);
}

TEST_CASE("round trips: state <-> amplitude and modal <-> eigenvalue") {
    std::mt19937 rng(20240811);
    std::uniform_real_distribution<double> zeta_d(0.0, 0.99);
    std::uniform_real_distribution<double> omega_d(0.1, 20.0);
    std::uniform_real_distribution<double> state_d(-5.0, 5.0);

    for (int trial = 0; trial < 200; ++trial) {
        const double zeta = zeta_d(rng);
        const double omega_n = omega_d(rng);
        const auto p = params_from_modal(zeta, omega_n, 0.0, 0.0);

        // zeta, omega_n recovered from the eigenvalue
        CHECK(damping_ratio(p.sigma, p.omega) ==
              doctest::Approx(zeta).epsilon(1e-12));
        CHECK(natural_frequency(p.sigma, p.omega) ==
              doctest::Approx(omega_n).epsilon(1e-12));

        // x(0), x'(0) recovered from A0
        const double x0 = state_d(rng);
        const double v0 = state_d(rng);
        const auto ic = a0_from_initial(x0, v0, p);
        const double x0_back = 2.0 * ic.a_re0;
        const double v0_back = 2.0 * (p.sigma * ic.a_re0 - p.omega * ic.a_im0);
        CHECK(x0_back == doctest::Approx(x0).epsilon(1e-12));
        CHECK(v0_back ==
              doctest::Approx(v0).epsilon(1e-12).scale(std::abs(x0) + 1.0));
    }
}

TEST_CASE("MmsScaling factories keep the physical quantities") {
    const auto p = params_from_modal(0.0098, 3.8072, 0.5, 6.9115);
    for (double eps : {1.0, 0.5, 0.1}) {
        const auto principal = MmsScaling::principal(p, eps);
        CHECK(principal.k_eps * eps == doctest::Approx(p.k_amp));
        CHECK(principal.xi * eps ==
              doctest::Approx(p.cap_omega - 2.0 * p.omega));
        const auto zeroth = MmsScaling::zeroth(p, eps);
        CHECK(zeroth.xi * eps == doctest::Approx(p.cap_omega));
    }
    CHECK_THROWS_AS(MmsScaling::principal(p, 0.0), ValidationError);
    CHECK_THROWS_AS(MmsScaling::zeroth(p, -1.0), ValidationError);
}

TEST_CASE("damping_ratio rejects the zero eigenvalue") {
    CHECK_THROWS_AS(damping_ratio(0.0, 0.0), SingularityError);
}
