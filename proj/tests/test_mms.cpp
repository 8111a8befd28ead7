#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paramres/analysis.hpp"
#include "paramres/errors.hpp"
#include "paramres/integrate.hpp"
#include "paramres/mms.hpp"
#include "paramres/oscillator.hpp"

#include "oracles.hpp"

#include <cmath>
#include <complex>
#include <random>

using namespace paramres;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

OscillatorParams ref_params(double cap_omega) {
    return params_from_modal(0.0098, 3.8072, 0.5, cap_omega);
}

InitialState ref_ic(const OscillatorParams &p) {
    return a0_from_initial(1.0, 0.0, p);
}

/// Complex slow amplitude reconstructed from a case-1 solution at t1.
Complex case1_amplitude(const mms::MmsSolution &sol, const OscillatorParams &p,
                        double t1) {
    const double xi = p.cap_omega - 2.0 * p.omega;
    const Complex rot = std::exp(Complex(0.0, 0.5 * (xi + sol.omega_k) * t1));
    return (std::polar(sol.c1, sol.r1 - sol.omega_k * t1) +
            std::polar(sol.c2, sol.r2)) *
           rot;
}

Complex case2_amplitude(const mms::MmsSolution &sol, const OscillatorParams &p,
                        double t1) {
    const double xi = p.cap_omega - 2.0 * p.omega;
    const Complex rot = std::exp(Complex(0.0, 0.5 * xi * t1));
    return (std::polar(sol.c3, sol.r3) * std::exp(0.5 * sol.omega_k * t1) +
            std::polar(sol.c4, sol.r4) * std::exp(-0.5 * sol.omega_k * t1)) *
           rot;
}

double rel_rms_vs_sim(const OscillatorParams &p, const TimeSeries &approx,
                      const TimeGrid &grid) {
    const TimeSeries truth = sim::integrate(p, ref_ic(p), grid);
    return analysis::rel_rms_error(approx.values, truth.values);
}

} // namespace

TEST_CASE("classify: the four reference configurations") {
    const auto c1 = mms::classify(ref_params(6.9115));
    CHECK(c1.tag == mms::CaseTag::Principal1);
    CHECK(c1.discriminant == doctest::Approx(0.4311).epsilon(1e-3));

    const auto c2 = mms::classify(ref_params(7.5524));
    CHECK(c2.tag == mms::CaseTag::Principal2);
    CHECK(c2.discriminant == doctest::Approx(-0.0587).epsilon(1e-3));

    const auto p3 = ref_params(7.3639);
    const auto c3 = mms::classify(p3);
    CHECK(c3.tag == mms::CaseTag::Principal3);
    CHECK(std::abs(c3.discriminant) <= mms::discriminant_tolerance(p3));
    CHECK(std::abs(c3.discriminant) == doctest::Approx(7e-5).epsilon(0.1));

    CHECK(mms::classify(ref_params(0.6283)).tag ==
          mms::CaseTag::ZerothOrder);
}

TEST_CASE("classify: outside every window") {
    CHECK(mms::classify(ref_params(20.0)).tag == mms::CaseTag::NonResonant);
    CHECK(mms::classify(ref_params(4.0)).tag == mms::CaseTag::NonResonant);
    // cap_omega = 0 is not a resonance (the zeroth window is open at 0)
    CHECK(mms::classify(ref_params(0.0)).tag == mms::CaseTag::NonResonant);
    // K = 0 closes the principal window entirely
    CHECK(mms::classify(params_from_modal(0.0098, 3.8072, 0.0, 7.6140)).tag ==
          mms::CaseTag::NonResonant);
}

TEST_CASE("classify: joint scaling of (sigma, omega, K, cap_omega)") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> zeta_d(0.0, 0.5);
    std::uniform_real_distribution<double> omega_d(1.2, 5.0);
    std::uniform_real_distribution<double> k_d(0.05, 1.0);
    std::uniform_real_distribution<double> cap_d(0.01, 12.0);
    std::uniform_real_distribution<double> c_d(0.6, 4.0);

    int kept = 0;
    while (kept < 100) {
        const double zeta = zeta_d(rng), omega_n = omega_d(rng);
        const double k = k_d(rng), cap = cap_d(rng), c = c_d(rng);
        const auto base = params_from_modal(zeta, omega_n, k, cap);
        // skip samples near a window edge or the boundary-case knife edge
        const double det = std::abs(cap - 2.0 * base.omega);
        if (std::abs(det - mms::principal_window_halfwidth(base)) <
                0.05 * base.omega ||
            std::abs(cap - mms::zeroth_window_bound(base)) <
                0.05 * base.omega ||
            cap < 0.02)
            continue;
        const auto rc = mms::classify(base);
        const double tol = mms::discriminant_tolerance(base);
        if (std::abs(rc.discriminant) > tol / 4.0 &&
            std::abs(rc.discriminant) < 4.0 * tol)
            continue;
        ++kept;

        const auto scaled =
            params_from_modal(zeta, c * omega_n, c * k, c * cap);
        const auto rcs = mms::classify(scaled);
        CHECK(rcs.tag == rc.tag);
        CHECK(rcs.discriminant ==
              doctest::Approx(c * c * rc.discriminant).epsilon(1e-12));
    }
}

TEST_CASE("case1_solution: reference beat frequency and IC consistency") {
    const auto p = ref_params(6.9115);
    const auto sol = mms::case1_solution(p, ref_ic(p));
    CHECK(sol.omega_k == doctest::Approx(0.6566).epsilon(1e-3));
    CHECK(sol.c1 >= 0.0);
    CHECK(sol.c2 >= 0.0);
    // x(0) = 2 C1 cos r1 + 2 C2 cos r2 recovers x0
    const double x_at_0 =
        2.0 * (sol.c1 * std::cos(sol.r1) + sol.c2 * std::cos(sol.r2));
    CHECK(x_at_0 == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("case1_solution: A_im0 = 0 reduction of the phase formulas") {
    // xi > omega_k > 0 regime: omega = 1, cap = 2 omega + 1, K = 0.5
    const auto p = params_from_modal(0.0, 1.0, 0.5, 3.0);
    const auto ic = a0_from_initial(2.0, 0.0, p); // A0 = (1, 0)
    REQUIRE(ic.a_im0 == 0.0);
    const double xi = p.cap_omega - 2.0 * p.omega;
    const auto sol = mms::case1_solution(p, ic);
    const double wk = sol.omega_k;

    CHECK(sol.r1 == doctest::Approx(std::atan(0.5 / (2.0 * (xi + wk)))));
    // r2 shares the printed tangent ratio; the quadrant differs by pi so
    // that the component keeps a nonnegative magnitude and x(0) = x0
    CHECK(std::tan(sol.r2) ==
          doctest::Approx(0.5 / (2.0 * (xi - wk))).epsilon(1e-9));
    const double x_at_0 =
        2.0 * (sol.c1 * std::cos(sol.r1) + sol.c2 * std::cos(sol.r2));
    CHECK(x_at_0 == doctest::Approx(2.0).epsilon(1e-12));

    // magnitudes match the product form of the printed coefficients
    const double radicand = xi * (ic.a_re0 * ic.a_re0 + ic.a_im0 * ic.a_im0) +
                            p.k_amp * ic.a_re0 * ic.a_im0;
    CHECK(sol.c1 * sol.c1 ==
          doctest::Approx((xi + wk) / (2.0 * wk * wk) * radicand));
    CHECK(sol.c2 * sol.c2 ==
          doctest::Approx((xi - wk) / (2.0 * wk * wk) * radicand));
}

TEST_CASE("case1_solution: magnitudes keep the printed product form when "
          "both factors go negative") {
    const auto p = ref_params(6.9115); // xi < 0 here
    const auto ic = ref_ic(p);
    const double xi = p.cap_omega - 2.0 * p.omega;
    const auto sol = mms::case1_solution(p, ic);
    const double wk = sol.omega_k;
    const double radicand = xi * (ic.a_re0 * ic.a_re0 + ic.a_im0 * ic.a_im0) +
                            p.k_amp * ic.a_re0 * ic.a_im0;
    REQUIRE(radicand < 0.0); // printed split square roots would go imaginary
    CHECK(sol.c1 * sol.c1 ==
          doctest::Approx((xi + wk) / (2.0 * wk * wk) * radicand));
    CHECK(sol.c2 * sol.c2 ==
          doctest::Approx((xi - wk) / (2.0 * wk * wk) * radicand));
}

TEST_CASE("case1 amplitude equals the slow-flow integration") {
    const auto p = ref_params(6.9115);
    const auto ic = ref_ic(p);
    const auto sol = mms::case1_solution(p, ic);
    const double xi = p.cap_omega - 2.0 * p.omega;
    for (double t1 : {1.0, 5.0, 20.0}) {
        const Complex ode = oracles::principal_amplitude_ode(
            p.k_amp, xi, Complex(ic.a_re0, ic.a_im0), t1, 200000);
        const Complex closed = case1_amplitude(sol, p, t1);
        CHECK(std::abs(closed - ode) <= 1e-9);
    }
}

TEST_CASE("case1_eval: zero coefficients, IC, and simulation agreement") {
    const auto p = ref_params(6.9115);
    const auto ic = ref_ic(p);
    const TimeGrid grid{0.0, 40.0, 1e-3};

    mms::MmsSolution zero_sol;
    zero_sol.omega_c = p.omega;
    const auto silent = mms::case1_eval(zero_sol, p, grid);
    for (double v : silent.values)
        CHECK(v == 0.0);

    const auto sol = mms::case1_solution(p, ic);
    const auto ts = mms::case1_eval(sol, p, grid);
    CHECK(ts.values[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rel_rms_vs_sim(p, ts, grid) <= 0.05);
    // beat period of the two-component interference
    CHECK(2.0 * kPi / sol.omega_k == doctest::Approx(9.57).epsilon(0.05));
}

TEST_CASE("case2_solution: growth exponent, phases, and coefficients") {
    const auto p = ref_params(7.5524);
    const auto ic = ref_ic(p);
    const auto sol = mms::case2_solution(p, ic);
    CHECK(p.sigma + 0.5 * sol.omega_k ==
          doctest::Approx(0.0838).epsilon(5e-3));

    // printed arctangent pairs hold as-is for this case
    const double xi = p.cap_omega - 2.0 * p.omega;
    const double wk = sol.omega_k, k = p.k_amp;
    const double u0 = ic.a_re0, v0 = ic.a_im0;
    const double r3 = std::atan2(-v0 * (k - 2.0 * wk) - 2.0 * xi * u0,
                                 u0 * (k + 2.0 * wk) + 2.0 * xi * v0);
    const double r4 = std::atan2(v0 * (k + 2.0 * wk) + 2.0 * xi * u0,
                                 -u0 * (k - 2.0 * wk) - 2.0 * xi * v0);
    CHECK(sol.r3 == doctest::Approx(r3).epsilon(1e-12));
    CHECK(sol.r4 == doctest::Approx(r4).epsilon(1e-12));

    // coefficient magnitudes: K(K +/- 2 omega_k)/(8 omega_k^2) product form
    const double c3_sq = k * (k + 2.0 * wk) / (8.0 * wk * wk) *
                         std::pow(u0 + 2.0 * xi * v0 / (k + 2.0 * wk), 2);
    const double c4_sq = k * (k - 2.0 * wk) / (8.0 * wk * wk) *
                         std::pow(u0 + 2.0 * xi * v0 / (k - 2.0 * wk), 2);
    CHECK(sol.c3 * sol.c3 == doctest::Approx(c3_sq).epsilon(1e-10));
    CHECK(sol.c4 * sol.c4 == doctest::Approx(c4_sq).epsilon(1e-10));
}

TEST_CASE("case2 amplitude equals the slow-flow integration") {
    const auto p = ref_params(7.5524);
    const auto ic = ref_ic(p);
    const auto sol = mms::case2_solution(p, ic);
    const double xi = p.cap_omega - 2.0 * p.omega;
    for (double t1 : {1.0, 5.0, 20.0}) {
        const Complex ode = oracles::principal_amplitude_ode(
            p.k_amp, xi, Complex(ic.a_re0, ic.a_im0), t1, 200000);
        const Complex closed = case2_amplitude(sol, p, t1);
        CHECK(std::abs(closed - ode) <= 1e-9 * std::abs(ode));
    }
}

TEST_CASE("case2_eval: IC, carrier locked at half the pump frequency, "
          "simulation agreement") {
    const auto p = ref_params(7.5524);
    const auto ic = ref_ic(p);
    const TimeGrid grid{0.0, 60.0, 1e-3};
    const auto sol = mms::case2_solution(p, ic);
    const auto ts = mms::case2_eval(sol, p, grid);
    CHECK(ts.values[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rel_rms_vs_sim(p, ts, grid) <= 0.05);

    // late-time zero crossings spaced by 2 pi / (cap_omega / 2)
    const auto freq = analysis::dominant_frequency(ts);
    REQUIRE(freq.has_value());
    CHECK(*freq == doctest::Approx(0.5 * p.cap_omega).epsilon(1e-3));
}

TEST_CASE("epsilon independence of the principal closed forms") {
    const TimeGrid grid{0.0, 60.0, 0.01};
    for (double cap : {6.9115, 7.5524}) {
        CAPTURE(cap);
        const auto p = ref_params(cap);
        const auto ic = ref_ic(p);
        const bool beating = cap == 6.9115;

        auto eval = [&](double eps) {
            const auto scaling = MmsScaling::principal(p, eps);
            const auto sol = beating ? mms::case1_solution(p, ic, scaling)
                                     : mms::case2_solution(p, ic, scaling);
            return beating ? mms::case1_eval(sol, p, grid)
                           : mms::case2_eval(sol, p, grid);
        };
        const auto ref = eval(1.0);
        double scale = 0.0;
        for (double v : ref.values)
            scale = std::max(scale, std::abs(v));
        for (double eps : {0.5, 0.1}) {
            const auto other = eval(eps);
            double worst = 0.0;
            for (std::size_t i = 0; i < ref.values.size(); ++i)
                worst = std::max(worst,
                                 std::abs(other.values[i] - ref.values[i]));
            CHECK(worst <= 1e-9 * scale);
        }
    }
}

TEST_CASE("beat frequency falls to zero monotonically toward the band edge") {
    const auto base = ref_params(7.5524);
    const double upper_edge = 2.0 * base.omega + 0.5 * base.k_amp;
    double prev = 1e9;
    for (double offset : {0.2, 0.1, 0.05, 0.02, 0.008}) {
        const auto p = ref_params(upper_edge + offset);
        const auto sol = mms::case1_solution(p, ref_ic(p));
        CHECK(sol.omega_k < prev);
        prev = sol.omega_k;
    }
    CHECK(prev < 0.2);
}

TEST_CASE("case1/case2 solution guards reject the wrong regime") {
    const auto p1 = ref_params(6.9115);
    const auto p2 = ref_params(7.5524);
    const auto p3 = ref_params(7.3639);
    CHECK_THROWS_AS(mms::case1_solution(p2, ref_ic(p2)), ValidationError);
    CHECK_THROWS_AS(mms::case2_solution(p1, ref_ic(p1)), ValidationError);
    CHECK_THROWS_AS(mms::case1_solution(p3, ref_ic(p3)), SingularityError);
    CHECK_THROWS_AS(mms::case2_solution(p3, ref_ic(p3)), SingularityError);
}

TEST_CASE("case3_eval: secular slopes vanish on the conserved combination") {
    const auto p = params_from_modal(0.0, 1.0, 0.5, 2.25); // exact +K/2 edge
    const TimeGrid grid{0.0, 30.0, 0.01};

    // plus branch conserves u+v: A_re0 = -A_im0 kills the secular term
    InitialState ic;
    ic.a_re0 = 0.7;
    ic.a_im0 = -0.7;
    ic.x0 = 2.0 * ic.a_re0;
    const auto plus = mms::case3_eval(p, ic, grid, mms::Case3Branch::Plus);
    for (std::size_t i = 0; i < plus.size(); ++i) {
        const double t = plus.time(i);
        const double expected =
            2.0 * 0.7 *
            (std::cos(0.5 * p.cap_omega * t) + std::sin(0.5 * p.cap_omega * t));
        CHECK(plus.values[i] ==
              doctest::Approx(expected).epsilon(1e-12).scale(1.0));
    }

    // minus branch conserves u-v: A_re0 = +A_im0 kills the secular term
    ic.a_im0 = 0.7;
    const auto minus = mms::case3_eval(p, ic, grid, mms::Case3Branch::Minus);
    for (std::size_t i = 0; i < minus.size(); ++i) {
        const double t = minus.time(i);
        const double expected =
            2.0 * 0.7 *
            (std::cos(0.5 * p.cap_omega * t) - std::sin(0.5 * p.cap_omega * t));
        CHECK(minus.values[i] ==
              doctest::Approx(expected).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("case3_eval: both branches equal the slow-flow integration") {
    // sigma = 0 so x(t) = 2 Re[A(t) e^{j omega t}] exactly mirrors A
    for (const bool plus : {true, false}) {
        CAPTURE(plus);
        const double k = 0.5;
        const auto p = params_from_modal(0.0, 1.0, k, 2.0 + (plus ? 0.25
                                                                  : -0.25));
        InitialState ic;
        ic.x0 = 1.0;
        ic.a_re0 = 0.5;
        ic.a_im0 = -0.13;
        const TimeGrid grid{0.0, 30.0, 0.5};
        const auto ts = mms::case3_eval(
            p, ic, grid, plus ? mms::Case3Branch::Plus : mms::Case3Branch::Minus);
        for (std::size_t i = 0; i < ts.size(); ++i) {
            const double t = ts.time(i);
            const Complex a = oracles::principal_amplitude_ode(
                k, (plus ? 0.5 : -0.5) * k, Complex(ic.a_re0, ic.a_im0), t,
                20000);
            const double expected =
                2.0 * (a * std::exp(Complex(0.0, p.omega * t))).real();
            CHECK(ts.values[i] ==
                  doctest::Approx(expected).epsilon(1e-7).scale(1.0));
        }
    }
}

TEST_CASE("case3_eval: reference boundary configuration vs simulation") {
    const auto p = ref_params(7.3639);
    const auto ic = ref_ic(p);
    const TimeGrid grid{0.0, 30.0, 1e-3};
    const auto ts = mms::case3_eval(p, ic, grid, mms::Case3Branch::Minus);
    CHECK(ts.values[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rel_rms_vs_sim(p, ts, grid) <= 0.05);
}

TEST_CASE("zeroth_eval: IC, modulation content, simulation agreement") {
    const auto p = ref_params(0.6283);
    const auto ic = ref_ic(p);
    const TimeGrid grid{0.0, 60.0, 1e-3};
    const auto ts = mms::zeroth_eval(p, ic, grid);
    CHECK(ts.values[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(rel_rms_vs_sim(p, ts, grid) <= 0.05);
    // apparent damping-ratio modulation period is the pump period
    CHECK(2.0 * kPi / p.cap_omega == doctest::Approx(10.0).epsilon(1e-3));
}

TEST_CASE("zeroth_eval: collapses to the unforced solution as K -> 0") {
    const TimeGrid grid{0.0, 60.0, 0.01};
    double dev_small = 0.0, dev_tiny = 0.0;
    for (double k : {1e-3, 1e-6}) {
        const auto p = params_from_modal(0.0098, 3.8072, k, 0.6283);
        const auto ic = a0_from_initial(1.0, 0.0, p);
        const auto zs = mms::zeroth_eval(p, ic, grid);
        const auto ref = sim::unforced_exact(p, ic, grid);
        const double dev = analysis::max_abs_error(zs.values, ref.values);
        (k == 1e-3 ? dev_small : dev_tiny) = dev;
    }
    CHECK(dev_tiny <= 2e-6);
    // deviation shrinks linearly with K
    CHECK(dev_small / dev_tiny == doctest::Approx(1e3).epsilon(0.05));
}

TEST_CASE("zeroth_eval: zero pump frequency is singular") {
    const auto p = ref_params(0.0);
    CHECK_THROWS_AS(mms::zeroth_eval(p, ref_ic(p), TimeGrid{0.0, 1.0, 0.1}),
                    SingularityError);
}

TEST_CASE("zeroth amplitude: closed form is the slow-flow solution") {
    const auto p = ref_params(0.6283);
    const auto ic = ref_ic(p);
    CHECK(mms::zeroth_amplitude_exact(p, ic, 0.0) ==
          Complex(ic.a_re0, ic.a_im0));
    for (double t1 : {2.0, 10.0, 2.0 * kPi / p.cap_omega}) {
        const Complex ode = oracles::zeroth_amplitude_ode(
            p, Complex(ic.a_re0, ic.a_im0), t1, 400000);
        const Complex closed = mms::zeroth_amplitude_exact(p, ic, t1);
        CHECK(std::abs(closed - ode) <= 1e-8 * std::abs(ode));
    }
}

TEST_CASE("zeroth amplitude: additive variant starts exact, then drifts") {
    const auto p = ref_params(0.6283);
    const auto ic = ref_ic(p);
    CHECK(std::abs(mms::zeroth_amplitude_approx(p, ic, 0.0) -
                   Complex(ic.a_re0, ic.a_im0)) <= 1e-14);
    // single-sideband exponent magnitude of the additive form
    const double g = p.k_amp * std::hypot(p.sigma, p.omega) /
                     (4.0 * p.cap_omega * p.omega);
    CHECK(g == doctest::Approx(0.1990).epsilon(1e-3));

    double worst = 0.0;
    const double period = 2.0 * kPi / p.cap_omega;
    for (int i = 0; i <= 200; ++i) {
        const double t1 = period * i / 200.0;
        const Complex d = mms::zeroth_amplitude_approx(p, ic, t1) -
                          mms::zeroth_amplitude_exact(p, ic, t1);
        worst = std::max(worst, std::abs(d) /
                                    std::abs(Complex(ic.a_re0, ic.a_im0)));
    }
    MESSAGE("additive-vs-exact amplitude discrepancy over one pump period: ",
            worst);
    CHECK(std::isfinite(worst));
    CHECK(worst > 0.0);
}

TEST_CASE("x1 corrections: zero without modulation, reported smallness") {
    const TimeGrid grid{0.0, 40.0, 0.01};
    const auto p0 = params_from_modal(0.0098, 3.8072, 0.0, 6.9115);
    const auto x1_zero =
        mms::x1_correction_principal(p0, a0_from_initial(1.0, 0.0, p0), grid);
    for (double v : x1_zero.values)
        CHECK(v == 0.0);

    const auto p1 = ref_params(6.9115);
    const auto x1p = mms::x1_correction_principal(p1, ref_ic(p1), grid);
    const auto x0p =
        mms::case1_eval(mms::case1_solution(p1, ref_ic(p1)), p1, grid);
    double max_x1 = 0.0, max_x0 = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        max_x1 = std::max(max_x1, std::abs(x1p.values[i]));
        max_x0 = std::max(max_x0, std::abs(x0p.values[i]));
    }
    MESSAGE("principal correction ratio max|x1|/max|x0| = ", max_x1 / max_x0);
    CHECK(max_x1 < max_x0);

    const auto pz = ref_params(0.6283);
    const auto x1z = mms::x1_correction_zeroth(pz, ref_ic(pz), grid);
    const auto x0z = mms::zeroth_eval(pz, ref_ic(pz), grid);
    max_x1 = max_x0 = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        max_x1 = std::max(max_x1, std::abs(x1z.values[i]));
        max_x0 = std::max(max_x0, std::abs(x0z.values[i]));
    }
    MESSAGE("slow-pump correction ratio max|x1|/max|x0| = ", max_x1 / max_x0);
    CHECK(max_x1 < max_x0);
}

TEST_CASE("x1 corrections: vanishing denominators are singular") {
    const TimeGrid grid{0.0, 1.0, 0.1};
    const auto p0 = ref_params(0.0);
    CHECK_THROWS_AS(mms::x1_correction_principal(p0, ref_ic(p0), grid),
                    SingularityError);
    CHECK_THROWS_AS(mms::x1_correction_zeroth(p0, ref_ic(p0), grid),
                    SingularityError);
    // cap_omega = 2 omega exactly
    const auto p2 = params_from_modal(0.0, 1.0, 0.1, 2.0);
    CHECK_THROWS_AS(
        mms::x1_correction_zeroth(p2, a0_from_initial(1.0, 0.0, p2), grid),
        SingularityError);
}
