#include "paramres/analysis.hpp"

#include "paramres/errors.hpp"

#include <cmath>
#include <vector>

namespace paramres::analysis {

double rel_rms_error(std::span<const double> a,
                     std::span<const double> truth) {
    if (a.size() != truth.size() || a.empty())
        throw ValidationError("rel_rms_error: length mismatch");
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double d = a[i] - truth[i];
        num += d * d;
        den += truth[i] * truth[i];
    }
    if (den == 0.0)
        throw ValidationError("rel_rms_error: zero reference signal");
    return std::sqrt(num / den);
}

double max_abs_error(std::span<const double> a,
                     std::span<const double> truth) {
    if (a.size() != truth.size() || a.empty())
        throw ValidationError("max_abs_error: length mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - truth[i]));
    return worst;
}

LineFit fit_line(std::span<const double> t, std::span<const double> y) {
    if (t.size() != y.size() || t.size() < 2)
        throw ValidationError("fit_line: need two or more samples");
    const double n = double(t.size());
    double st = 0, sy = 0, stt = 0, sty = 0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        st += t[i];
        sy += y[i];
        stt += t[i] * t[i];
        sty += t[i] * y[i];
    }
    const double det = n * stt - st * st;
    if (det == 0.0)
        throw ValidationError("fit_line: degenerate abscissae");
    return LineFit{(stt * sy - st * sty) / det, (n * sty - st * sy) / det};
}

std::optional<double> oscillation_period(std::span<const double> t,
                                         std::span<const double> y) {
    if (t.size() != y.size() || t.size() < 4)
        return std::nullopt;
    const LineFit trend = fit_line(t, y);
    std::vector<double> res(t.size());
    double rms = 0.0;
    for (std::size_t i = 0; i < t.size(); ++i) {
        res[i] = y[i] - (trend.intercept + trend.slope * t[i]);
        rms += res[i] * res[i];
    }
    rms = std::sqrt(rms / double(t.size()));
    if (rms == 0.0)
        return std::nullopt;

    // Upward crossings with hysteresis: a crossing counts only after the
    // residual dipped below -h and is confirmed once it exceeds +h, so
    // estimator jitter around the trend cannot inject extra crossings.
    const double h = 0.25 * rms;
    std::vector<double> ups;
    bool armed = false;
    std::optional<double> pending;
    for (std::size_t i = 1; i < t.size(); ++i) {
        if (armed && !pending && res[i - 1] < 0.0 && res[i] >= 0.0)
            pending = t[i - 1] + (t[i] - t[i - 1]) * (-res[i - 1]) /
                                     (res[i] - res[i - 1]);
        if (pending && res[i] >= h) {
            ups.push_back(*pending);
            pending.reset();
            armed = false;
        }
        if (res[i] <= -h) {
            armed = true;
            pending.reset();
        }
    }
    if (ups.size() < 2)
        return std::nullopt;
    return (ups.back() - ups.front()) / double(ups.size() - 1);
}

std::optional<double> dominant_frequency(const TimeSeries &ts) {
    const auto &v = ts.values;
    std::vector<double> crossings;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if ((v[i - 1] < 0.0 && v[i] >= 0.0) ||
            (v[i - 1] > 0.0 && v[i] <= 0.0)) {
            const double frac = v[i - 1] / (v[i - 1] - v[i]);
            crossings.push_back(ts.time(i - 1) + frac * ts.grid.dt);
        }
    }
    if (crossings.size() < 3)
        return std::nullopt;
    const double mean_half_period =
        (crossings.back() - crossings.front()) / double(crossings.size() - 1);
    if (mean_half_period <= 0.0)
        return std::nullopt;
    return 3.14159265358979323846 / mean_half_period;
}

double exponential_rate(std::span<const double> t, std::span<const double> y,
                        double floor_abs) {
    std::vector<double> tt, ly;
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (std::abs(y[i]) > floor_abs) {
            tt.push_back(t[i]);
            ly.push_back(std::log(std::abs(y[i])));
        }
    }
    if (tt.size() < 2)
        throw ValidationError("exponential_rate: too few usable samples");
    return fit_line(tt, ly).slope;
}

} // namespace paramres::analysis
