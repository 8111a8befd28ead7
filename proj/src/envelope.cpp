#include "paramres/envelope.hpp"

#include "paramres/errors.hpp"

#include <cmath>
#include <vector>

namespace paramres::modal {

namespace {

// Fritsch-Carlson slopes for a monotone cubic through (t, y).
std::vector<double> pchip_slopes(const std::vector<double> &t,
                                 const std::vector<double> &y) {
    const std::size_t n = t.size();
    std::vector<double> d(n, 0.0);
    if (n == 2) {
        d[0] = d[1] = (y[1] - y[0]) / (t[1] - t[0]);
        return d;
    }
    std::vector<double> h(n - 1), delta(n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        h[i] = t[i + 1] - t[i];
        delta[i] = (y[i + 1] - y[i]) / h[i];
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
        if (delta[i - 1] * delta[i] <= 0.0) {
            d[i] = 0.0;
        } else {
            const double w1 = 2.0 * h[i] + h[i - 1];
            const double w2 = h[i] + 2.0 * h[i - 1];
            d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
        }
    }
    auto endpoint = [](double h0, double h1, double d0, double d1) {
        double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
        if (s * d0 <= 0.0)
            return 0.0;
        if (std::abs(s) > 3.0 * std::abs(d0))
            return 3.0 * d0;
        return s;
    };
    d[0] = endpoint(h[0], h[1], delta[0], delta[1]);
    d[n - 1] = endpoint(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
    return d;
}

double hermite(double t, double t0, double t1, double y0, double y1, double d0,
               double d1) {
    const double h = t1 - t0;
    const double s = (t - t0) / h;
    const double s2 = s * s, s3 = s2 * s;
    return (2.0 * s3 - 3.0 * s2 + 1.0) * y0 + (s3 - 2.0 * s2 + s) * h * d0 +
           (-2.0 * s3 + 3.0 * s2) * y1 + (s3 - s2) * h * d1;
}

} // namespace

TimeSeries envelope(const TimeSeries &ts) {
    const auto &x = ts.values;
    const std::size_t n = x.size();

    std::size_t sign_changes = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (x[i - 1] * x[i] < 0.0)
            ++sign_changes;
    if (sign_changes < 3)
        throw EnvelopeError("envelope: signal is not oscillatory");

    // Peaks of |x| with 3-point parabolic refinement.
    std::vector<double> pt, pv;
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double a0 = std::abs(x[i - 1]);
        const double a1 = std::abs(x[i]);
        const double a2 = std::abs(x[i + 1]);
        if (!(a1 > 0.0) || a1 < a0 || a1 < a2)
            continue;
        double tpk = ts.time(i), vpk = a1;
        const double den = a0 - 2.0 * a1 + a2;
        if (den < 0.0) {
            double off = 0.5 * (a0 - a2) / den;
            off = std::min(0.5, std::max(-0.5, off));
            tpk += off * ts.grid.dt;
            vpk = a1 - 0.25 * (a0 - a2) * off;
        }
        if (pt.empty() || tpk > pt.back()) {
            pt.push_back(tpk);
            pv.push_back(vpk);
        }
    }
    if (pt.size() < 2)
        throw EnvelopeError("envelope: too few extrema");

    const std::vector<double> slopes = pchip_slopes(pt, pv);

    TimeSeries env;
    env.grid = ts.grid;
    env.values.resize(n);
    std::size_t seg = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const double t = ts.time(i);
        if (t <= pt.front()) {
            env.values[i] = pv.front();
            continue;
        }
        if (t >= pt.back()) {
            env.values[i] = pv.back();
            continue;
        }
        while (seg + 2 < pt.size() && t > pt[seg + 1])
            ++seg;
        env.values[i] = hermite(t, pt[seg], pt[seg + 1], pv[seg], pv[seg + 1],
                                slopes[seg], slopes[seg + 1]);
    }
    return env;
}

} // namespace paramres::modal
