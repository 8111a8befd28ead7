#include "paramres/prony.hpp"

#include "paramres/analysis.hpp"
#include "paramres/errors.hpp"
#include "paramres/linalg.hpp"
#include "paramres/oscillator.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace paramres::modal {

namespace {

using Complex = std::complex<double>;

struct RawMode {
    Complex pole;      // lambda
    Complex amplitude; // complex amplitude of the +omega component
    bool paired;       // true when a conjugate partner was found
};

} // namespace

std::vector<ModeEstimate> prony_fit(const TimeSeries &window,
                                    std::size_t model_order) {
    const std::size_t n = window.size();
    const std::size_t p = model_order;
    if (p == 0)
        throw ValidationError("prony_fit: model_order must be >= 1");
    if (n < 2 * p + 1)
        throw ValidationError("prony_fit: window too short for order " +
                              std::to_string(p));
    const double dt = window.grid.dt;
    const auto &x = window.values;

    // Forward linear prediction x[i] = sum_k a_k x[i-k], solved least squares.
    const std::size_t rows = n - p;
    std::vector<double> h(rows * p);
    std::vector<double> rhs(rows);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < p; ++k)
            h[r * p + k] = x[p + r - 1 - k];
        rhs[r] = x[p + r];
    }
    const std::vector<double> a = linalg::lstsq(std::move(h), rows, p, rhs);

    // Characteristic polynomial z^p - a_1 z^(p-1) - ... - a_p.
    std::vector<double> monic(p);
    for (std::size_t k = 0; k < p; ++k)
        monic[k] = -a[k];
    const std::vector<Complex> roots = linalg::polynomial_roots(monic);

    // Map to continuous poles, dropping rooting artifacts far off the unit
    // circle (|z| outside e^{+-kMaxPoleRate dt}).
    std::vector<Complex> zs, lambdas;
    for (const Complex &z : roots) {
        const double r = std::abs(z);
        if (!(r > std::exp(-kMaxPoleRate * dt)) ||
            !(r < std::exp(kMaxPoleRate * dt)))
            continue;
        zs.push_back(z);
        lambdas.push_back(std::log(z) / dt);
    }
    if (zs.empty())
        throw IllConditionedError("prony_fit: no usable poles");

    // Complex amplitudes from x[i] = sum_m b_m z_m^i.
    const std::size_t q = zs.size();
    std::vector<Complex> vand(n * q);
    std::vector<Complex> bx(n);
    std::vector<Complex> zpow(q, Complex(1.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        bx[i] = Complex(x[i], 0.0);
        for (std::size_t m = 0; m < q; ++m) {
            vand[i * q + m] = zpow[m];
            zpow[m] *= zs[m];
        }
    }
    const std::vector<Complex> b = linalg::lstsq(std::move(vand), n, q, bx);

    // Collapse conjugate pairs.
    const double imag_tol = 1e-9 / dt;
    std::vector<bool> used(q, false);
    std::vector<RawMode> raw;
    for (std::size_t m = 0; m < q; ++m) {
        if (used[m])
            continue;
        used[m] = true;
        if (std::abs(lambdas[m].imag()) <= imag_tol) {
            raw.push_back({Complex(lambdas[m].real(), 0.0), b[m], false});
            continue;
        }
        std::size_t partner = q;
        double best = 1e-6 * std::max(1.0, std::abs(zs[m]));
        for (std::size_t k = 0; k < q; ++k) {
            if (used[k])
                continue;
            const double d = std::abs(std::conj(zs[m]) - zs[k]);
            if (d < best) {
                best = d;
                partner = k;
            }
        }
        const bool plus = lambdas[m].imag() > 0.0;
        Complex pole = plus ? lambdas[m] : std::conj(lambdas[m]);
        Complex amp = plus ? b[m] : std::conj(b[m]);
        if (partner != q) {
            used[partner] = true;
            const Complex other =
                plus ? std::conj(b[partner]) : b[partner];
            amp = 0.5 * (amp + other); // average the pair's estimates
            raw.push_back({pole, amp, true});
        } else {
            raw.push_back({pole, amp, true});
        }
    }

    // Reconstruction energy per mode, normalized across modes.
    std::vector<ModeEstimate> modes;
    std::vector<double> energies;
    double total = 0.0;
    for (const RawMode &rm : raw) {
        double e = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double t = double(i) * dt;
            double s;
            if (rm.pole.imag() > 0.0)
                s = 2.0 * (rm.amplitude * std::exp(rm.pole * t)).real();
            else
                s = (rm.amplitude * std::exp(rm.pole.real() * t)).real();
            e += s * s;
        }
        energies.push_back(e);
        total += e;

        ModeEstimate me;
        me.lambda_re = rm.pole.real();
        me.lambda_im = rm.pole.imag();
        if (rm.pole.imag() > 0.0) {
            me.amplitude = 2.0 * std::abs(rm.amplitude);
            me.phase = std::arg(rm.amplitude);
        } else {
            me.amplitude = std::abs(rm.amplitude.real());
            me.phase = rm.amplitude.real() < 0.0 ? 3.14159265358979323846 : 0.0;
        }
        modes.push_back(me);
    }
    for (std::size_t m = 0; m < modes.size(); ++m)
        modes[m].energy = total > 0.0 ? energies[m] / total : 0.0;

    std::sort(modes.begin(), modes.end(),
              [](const ModeEstimate &l, const ModeEstimate &r) {
                  return l.energy > r.energy;
              });
    return modes;
}

double damping_ratio_of(const ModeEstimate &mode) {
    return damping_ratio(mode.lambda_re, mode.lambda_im);
}

DampingTrace sliding_damping(const TimeSeries &ts, double window_len,
                             double stride, std::size_t model_order) {
    ts.grid.validate();
    const double duration = ts.grid.t_end - ts.grid.t_start;
    if (!(stride > 0.0))
        throw ValidationError("sliding_damping: stride must be positive");
    if (!(window_len > 0.0) || window_len >= duration)
        throw ValidationError(
            "sliding_damping: window_len must lie inside the series");

    const auto global = analysis::dominant_frequency(ts);
    DampingTrace trace;
    if (!global)
        return trace; // nothing oscillatory to track

    const double dt = ts.grid.dt;
    const std::size_t win_samples =
        static_cast<std::size_t>(std::floor(window_len / dt + 1e-9)) + 1;
    double prev_omega = *global;

    for (double start = ts.grid.t_start;
         start + window_len <= ts.grid.t_end + 0.5 * dt; start += stride) {
        const std::size_t i0 = static_cast<std::size_t>(
            std::llround((start - ts.grid.t_start) / dt));
        if (i0 + win_samples > ts.size())
            break;

        TimeSeries window;
        window.grid = TimeGrid{ts.time(i0),
                               ts.time(i0) + double(win_samples - 1) * dt, dt};
        window.values.assign(ts.values.begin() + long(i0),
                             ts.values.begin() + long(i0 + win_samples));
        try {
            const auto modes = prony_fit(window, model_order);
            const ModeEstimate *best = nullptr;
            for (const auto &m : modes) {
                if (m.lambda_im < 0.7 * *global || m.lambda_im > 1.3 * *global)
                    continue;
                if (!best) {
                    best = &m;
                } else if (m.energy > 0.98 * best->energy &&
                           std::abs(m.lambda_im - prev_omega) <
                               std::abs(best->lambda_im - prev_omega)) {
                    best = &m; // near-tie on energy: prefer frequency continuity
                }
            }
            if (!best)
                continue;
            trace.push_back(DampingTraceEntry{ts.time(i0) + 0.5 * window_len,
                                              damping_ratio_of(*best),
                                              best->lambda_im});
            prev_omega = best->lambda_im;
        } catch (const Error &) {
            // failed window -> gap in the trace
        }
    }
    return trace;
}

} // namespace paramres::modal
