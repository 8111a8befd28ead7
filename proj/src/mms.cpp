#include "paramres/mms.hpp"

#include "paramres/errors.hpp"

#include <cmath>
#include <complex>
#include <string>

namespace paramres::mms {

namespace {

using Complex = std::complex<double>;

constexpr Complex kJ{0.0, 1.0};

Complex amplitude_a0(const InitialState &ic) {
    return Complex{ic.a_re0, ic.a_im0};
}

/// Right-hand-side constant of the slow-amplitude system written as
/// B' = M B with M = [[k, s], [-s, -k]], k = k_eps/4, s = xi/2. The complex
/// combination below shows up in both eigen-splittings.
Complex slow_mix(const MmsScaling &sc, const Complex &a0) {
    const double k = sc.k_eps / 4.0;
    const double s = sc.xi / 2.0;
    const double u0 = a0.real();
    const double v0 = a0.imag();
    return Complex{k * u0 + s * v0, -(s * u0 + k * v0)};
}

void require_finite_coeffs(const MmsSolution &sol, const char *who) {
    const double fields[] = {sol.omega_k, sol.omega_c, sol.c1, sol.c2,
                             sol.r1,      sol.r2,      sol.c3, sol.c4,
                             sol.r3,      sol.r4};
    for (double f : fields)
        if (!std::isfinite(f))
            throw CoefficientDomainError(
                std::string(who) + ": coefficients failed to evaluate finitely");
}

} // namespace

const char *to_string(CaseTag tag) {
    switch (tag) {
    case CaseTag::Principal1:
        return "principal1";
    case CaseTag::Principal2:
        return "principal2";
    case CaseTag::Principal3:
        return "principal3";
    case CaseTag::ZerothOrder:
        return "zeroth_order";
    case CaseTag::NonResonant:
        return "non_resonant";
    }
    return "unknown";
}

double principal_window_halfwidth(const OscillatorParams &p) {
    return 2.0 * p.k_amp;
}

double zeroth_window_bound(const OscillatorParams &p) { return 0.5 * p.omega; }

double discriminant_tolerance(const OscillatorParams &p) {
    const double two_omega = 2.0 * p.omega;
    return 2e-6 * std::max(1.0, two_omega * two_omega);
}

ResonanceCase classify(const OscillatorParams &p) {
    const double detuning = p.cap_omega - 2.0 * p.omega;
    const double disc = detuning * detuning - 0.25 * p.k_amp * p.k_amp;
    ResonanceCase rc;
    rc.discriminant = disc;
    if (std::abs(detuning) <= principal_window_halfwidth(p)) {
        const double tol = discriminant_tolerance(p);
        if (disc > tol)
            rc.tag = CaseTag::Principal1;
        else if (disc < -tol)
            rc.tag = CaseTag::Principal2;
        else
            rc.tag = CaseTag::Principal3;
    } else if (p.cap_omega > 0.0 && p.cap_omega <= zeroth_window_bound(p)) {
        rc.tag = CaseTag::ZerothOrder;
    } else {
        rc.tag = CaseTag::NonResonant;
    }
    return rc;
}

MmsSolution case1_solution(const OscillatorParams &p, const InitialState &ic) {
    return case1_solution(p, ic, MmsScaling::principal(p, 1.0));
}

MmsSolution case1_solution(const OscillatorParams &p, const InitialState &ic,
                           const MmsScaling &scaling) {
    const double eps = scaling.epsilon;
    const double disc_scaled =
        scaling.xi * scaling.xi - 0.25 * scaling.k_eps * scaling.k_eps;
    const double disc_phys = disc_scaled * eps * eps;
    const double tol = discriminant_tolerance(p);
    if (std::abs(disc_phys) <= tol)
        throw SingularityError("case1_solution: discriminant is at the "
                               "boundary; the secular case applies");
    if (disc_phys < 0.0)
        throw ValidationError("case1_solution: discriminant is negative; the "
                              "growth case applies");

    const double omega_k = std::sqrt(disc_scaled); // scaled by 1/eps
    const Complex a0 = amplitude_a0(ic);
    const Complex q = slow_mix(scaling, a0);
    // Oscillatory splitting of B' = M B: B = P- e^{-j omega_k T1/2}
    //                                      + P+ e^{+j omega_k T1/2}.
    const Complex p_minus = 0.5 * a0 + kJ * q / omega_k;
    const Complex p_plus = 0.5 * a0 - kJ * q / omega_k;

    MmsSolution sol;
    sol.rcase = ResonanceCase{CaseTag::Principal1, disc_phys};
    sol.omega_k = eps * omega_k;
    sol.omega_c = p.omega + 0.5 * eps * (scaling.xi + omega_k);
    sol.c1 = std::abs(p_minus);
    sol.r1 = std::arg(p_minus);
    sol.c2 = std::abs(p_plus);
    sol.r2 = std::arg(p_plus);
    require_finite_coeffs(sol, "case1_solution");
    return sol;
}

TimeSeries case1_eval(const MmsSolution &sol, const OscillatorParams &p,
                      const TimeGrid &grid) {
    const std::size_t n = grid.size();
    TimeSeries out;
    out.grid = grid;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.time(i);
        const double env = 2.0 * std::exp(p.sigma * t);
        out.values[i] =
            env * (sol.c1 * std::cos((sol.omega_c - sol.omega_k) * t + sol.r1) +
                   sol.c2 * std::cos(sol.omega_c * t + sol.r2));
    }
    return out;
}

MmsSolution case2_solution(const OscillatorParams &p, const InitialState &ic) {
    return case2_solution(p, ic, MmsScaling::principal(p, 1.0));
}

MmsSolution case2_solution(const OscillatorParams &p, const InitialState &ic,
                           const MmsScaling &scaling) {
    const double eps = scaling.epsilon;
    const double disc_scaled =
        scaling.xi * scaling.xi - 0.25 * scaling.k_eps * scaling.k_eps;
    const double disc_phys = disc_scaled * eps * eps;
    const double tol = discriminant_tolerance(p);
    if (std::abs(disc_phys) <= tol)
        throw SingularityError("case2_solution: discriminant is at the "
                               "boundary; the secular case applies");
    if (disc_phys > 0.0)
        throw ValidationError("case2_solution: discriminant is positive; the "
                              "beating case applies");

    const double omega_k = std::sqrt(-disc_scaled); // scaled by 1/eps
    const Complex a0 = amplitude_a0(ic);
    const Complex q = slow_mix(scaling, a0);
    // Hyperbolic splitting: B = G+ e^{+omega_k T1/2} + G- e^{-omega_k T1/2}.
    const Complex g_plus = 0.5 * a0 + q / omega_k;
    const Complex g_minus = 0.5 * a0 - q / omega_k;

    MmsSolution sol;
    sol.rcase = ResonanceCase{CaseTag::Principal2, disc_phys};
    sol.omega_k = eps * omega_k;
    sol.c3 = std::abs(g_plus);
    sol.r3 = std::arg(g_plus);
    sol.c4 = std::abs(g_minus);
    sol.r4 = std::arg(g_minus);
    require_finite_coeffs(sol, "case2_solution");
    return sol;
}

TimeSeries case2_eval(const MmsSolution &sol, const OscillatorParams &p,
                      const TimeGrid &grid) {
    const std::size_t n = grid.size();
    const double carrier = 0.5 * p.cap_omega;
    const double rate_grow = p.sigma + 0.5 * sol.omega_k;
    const double rate_decay = p.sigma - 0.5 * sol.omega_k;
    TimeSeries out;
    out.grid = grid;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.time(i);
        out.values[i] =
            2.0 * sol.c3 * std::exp(rate_grow * t) *
                std::cos(carrier * t + sol.r3) +
            2.0 * sol.c4 * std::exp(rate_decay * t) *
                std::cos(carrier * t + sol.r4);
    }
    return out;
}

TimeSeries case3_eval(const OscillatorParams &p, const InitialState &ic,
                      const TimeGrid &grid, Case3Branch branch) {
    const std::size_t n = grid.size();
    const double carrier = 0.5 * p.cap_omega;
    const double quarter_k = 0.25 * p.k_amp;
    // On the +K/2 edge the slow flow conserves u+v; on the -K/2 edge it
    // conserves u-v. The conserved combination fixes the secular slope.
    const double slope = branch == Case3Branch::Plus
                             ? quarter_k * (ic.a_re0 + ic.a_im0)
                             : quarter_k * (ic.a_re0 - ic.a_im0);
    const double v_slope = branch == Case3Branch::Plus ? -slope : slope;

    TimeSeries out;
    out.grid = grid;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.time(i);
        const double u = ic.a_re0 + slope * t;
        const double v = ic.a_im0 + v_slope * t;
        out.values[i] = 2.0 * std::exp(p.sigma * t) *
                        (u * std::cos(carrier * t) - v * std::sin(carrier * t));
    }
    return out;
}

TimeSeries zeroth_eval(const OscillatorParams &p, const InitialState &ic,
                       const TimeGrid &grid) {
    if (p.cap_omega == 0.0)
        throw SingularityError("zeroth_eval: cap_omega = 0");
    const double omega = p.omega;
    const double omega_n = std::hypot(p.sigma, omega);
    const double cap = p.cap_omega;
    const double k = p.k_amp;
    // Slow modulation makes both sidebands of the pump resonant with the
    // carrier, so the instantaneous decay rate is sigma - (K/2) cos(cap t)
    // in full. Integrating it gives the envelope exponent; the carrier phase
    // picks up the matching sin terms plus the mean rate shift -K^2/(16 wn)
    // from the instantaneous frequency sqrt(wn^2 - sigma(t)^2).
    const double env_mod = 0.5 * k / cap;
    const double rate_shift = k * k / (16.0 * omega_n);
    const double phase_mod1 = 0.5 * p.sigma * k / (omega_n * cap);
    const double phase_mod2 = k * k / (32.0 * omega_n * cap);

    const std::size_t n = grid.size();
    TimeSeries out;
    out.grid = grid;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.time(i);
        const double env =
            std::exp(p.sigma * t - env_mod * std::sin(cap * t));
        const double phase = (omega - rate_shift) * t +
                             phase_mod1 * std::sin(cap * t) -
                             phase_mod2 * std::sin(2.0 * cap * t);
        out.values[i] = 2.0 * env *
                        (ic.a_re0 * std::cos(phase) -
                         ic.a_im0 * std::sin(phase));
    }
    return out;
}

std::complex<double> zeroth_amplitude_exact(const OscillatorParams &p,
                                            const InitialState &ic,
                                            double t1) {
    if (p.cap_omega == 0.0)
        throw SingularityError("zeroth_amplitude_exact: xi = 0");
    const double xi = p.cap_omega;
    const Complex g = p.k_amp * Complex{p.sigma, p.omega} /
                      (4.0 * xi * p.omega);
    const Complex a0 = amplitude_a0(ic);
    return a0 * std::exp(g * (std::exp(kJ * xi * t1) - 1.0));
}

std::complex<double> zeroth_amplitude_approx(const OscillatorParams &p,
                                             const InitialState &ic,
                                             double t1) {
    if (p.cap_omega == 0.0)
        throw SingularityError("zeroth_amplitude_approx: xi = 0");
    const double xi = p.cap_omega;
    const Complex g = p.k_amp * Complex{p.sigma, p.omega} /
                      (4.0 * xi * p.omega);
    const Complex a0 = amplitude_a0(ic);
    return std::exp(g * std::exp(kJ * xi * t1)) + a0 - std::exp(g);
}

TimeSeries x1_correction_principal(const OscillatorParams &p,
                                   const InitialState &ic,
                                   const TimeGrid &grid) {
    const double omega = p.omega;
    const double cap = p.cap_omega;
    if (cap == 0.0 || cap + 2.0 * omega == 0.0)
        throw SingularityError(
            "x1_correction_principal: vanishing denominator");
    const Complex lam{p.sigma, omega};
    const Complex prefactor = 0.5 * p.k_amp * lam * amplitude_a0(ic);
    const double d1 = cap * (cap + 2.0 * omega);
    const double d2 = 2.0 * omega * (cap + 2.0 * omega);
    const double d3 = 2.0 * omega * cap;

    const std::size_t n = grid.size();
    TimeSeries out;
    out.grid = grid;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.time(i);
        const Complex bracket =
            std::exp(Complex{p.sigma, cap + omega} * t) / d1 +
            std::exp(Complex{p.sigma, -omega} * t) / d2 -
            std::exp(Complex{p.sigma, omega} * t) / d3;
        out.values[i] = 2.0 * (prefactor * bracket).real();
    }
    return out;
}

TimeSeries x1_correction_zeroth(const OscillatorParams &p,
                                const InitialState &ic, const TimeGrid &grid) {
    const double omega = p.omega;
    const double cap = p.cap_omega;
    if (cap == 0.0 || cap - 2.0 * omega == 0.0)
        throw SingularityError("x1_correction_zeroth: vanishing denominator");
    const Complex lam_bar{p.sigma, -omega};
    const Complex prefactor =
        0.5 * p.k_amp * lam_bar * std::conj(amplitude_a0(ic));
    const double d1 = cap * (cap - 2.0 * omega);
    const double d2 = 2.0 * omega * cap;
    const double d3 = 2.0 * omega * (2.0 * omega - cap);

    const std::size_t n = grid.size();
    TimeSeries out;
    out.grid = grid;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.time(i);
        const Complex bracket =
            std::exp(Complex{p.sigma, cap - omega} * t) / d1 +
            std::exp(Complex{p.sigma, -omega} * t) / d2 -
            std::exp(Complex{p.sigma, omega} * t) / d3;
        out.values[i] = 2.0 * (prefactor * bracket).real();
    }
    return out;
}

} // namespace paramres::mms
