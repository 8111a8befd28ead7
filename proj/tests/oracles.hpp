#pragma once

// Test-only oracles: brute-force integrators for the slow-amplitude
// equations, kept independent of the closed forms they check.

#include "paramres/oscillator.hpp"

#include <complex>

namespace oracles {

using Complex = std::complex<double>;

/// RK4 on dA/dt1 = (k_eps/4) e^{j xi t1} conj(A).
inline Complex principal_amplitude_ode(double k_eps, double xi, Complex a0,
                                       double t1, int steps) {
    auto f = [&](double t, Complex a) {
        return 0.25 * k_eps * std::exp(Complex(0.0, xi * t)) * std::conj(a);
    };
    Complex a = a0;
    const double h = t1 / steps;
    double t = 0.0;
    for (int i = 0; i < steps; ++i) {
        const Complex k1 = f(t, a);
        const Complex k2 = f(t + 0.5 * h, a + 0.5 * h * k1);
        const Complex k3 = f(t + 0.5 * h, a + 0.5 * h * k2);
        const Complex k4 = f(t + h, a + h * k3);
        a += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
    }
    return a;
}

/// RK4 on dA/dt1 = k (-omega + j sigma)/(4 omega) e^{j xi t1} A.
inline Complex zeroth_amplitude_ode(const paramres::OscillatorParams &p,
                                    Complex a0, double t1, int steps) {
    const Complex c =
        p.k_amp * Complex(-p.omega, p.sigma) / (4.0 * p.omega);
    const double xi = p.cap_omega;
    auto f = [&](double t, Complex a) {
        return c * std::exp(Complex(0.0, xi * t)) * a;
    };
    Complex a = a0;
    const double h = t1 / steps;
    double t = 0.0;
    for (int i = 0; i < steps; ++i) {
        const Complex k1 = f(t, a);
        const Complex k2 = f(t + 0.5 * h, a + 0.5 * h * k1);
        const Complex k3 = f(t + 0.5 * h, a + 0.5 * h * k2);
        const Complex k4 = f(t + h, a + h * k3);
        a += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
    }
    return a;
}

} // namespace oracles
