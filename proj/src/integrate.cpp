#include "paramres/integrate.hpp"

#include "paramres/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace paramres {

std::size_t TimeGrid::size() const {
    validate();
    const double q = (t_end - t_start) / dt;
    // Tolerate representation error in spans that divide evenly.
    return static_cast<std::size_t>(std::floor(q + 1e-9 * std::max(1.0, q))) +
           1;
}

void TimeGrid::validate() const {
    if (!(dt > 0.0))
        throw ValidationError("TimeGrid: dt must be positive");
    if (!(t_end > t_start))
        throw ValidationError("TimeGrid: t_end must exceed t_start");
}

} // namespace paramres

namespace paramres::sim {

namespace {

struct State {
    double x;
    double v;
};

struct Rhs {
    double sigma;
    double omega2; // sigma^2 + omega^2
    double k_amp;
    double cap_omega;

    State operator()(double t, const State &s) const {
        const double damping = 2.0 * sigma - k_amp * std::cos(cap_omega * t);
        return {s.v, damping * s.v - omega2 * s.x};
    }
};

} // namespace

StateSeries integrate_full(const OscillatorParams &params,
                           const InitialState &ic, const TimeGrid &grid) {
    const std::size_t n = grid.size();
    const double h = grid.dt;
    const Rhs f{params.sigma,
                params.sigma * params.sigma + params.omega * params.omega,
                params.k_amp, params.cap_omega};

    StateSeries out;
    out.x.grid = grid;
    out.x.values.resize(n);
    out.v.grid = grid;
    out.v.values.resize(n);

    State y{ic.x0, ic.v0};
    for (std::size_t i = 0; i < n; ++i) {
        if (!(std::abs(y.x) <= kDivergenceGuard) ||
            !(std::abs(y.v) <= kDivergenceGuard))
            throw DivergenceError("integrate: state exceeded divergence guard "
                                  "at t = " +
                                      std::to_string(grid.time(i)),
                                  grid.time(i));
        out.x.values[i] = y.x;
        out.v.values[i] = y.v;
        if (i + 1 == n)
            break;

        const double t = grid.time(i);
        const State k1 = f(t, y);
        const State k2 =
            f(t + 0.5 * h, {y.x + 0.5 * h * k1.x, y.v + 0.5 * h * k1.v});
        const State k3 =
            f(t + 0.5 * h, {y.x + 0.5 * h * k2.x, y.v + 0.5 * h * k2.v});
        const State k4 = f(t + h, {y.x + h * k3.x, y.v + h * k3.v});
        y.x += h / 6.0 * (k1.x + 2.0 * k2.x + 2.0 * k3.x + k4.x);
        y.v += h / 6.0 * (k1.v + 2.0 * k2.v + 2.0 * k3.v + k4.v);
    }
    return out;
}

TimeSeries integrate(const OscillatorParams &params, const InitialState &ic,
                     const TimeGrid &grid) {
    return integrate_full(params, ic, grid).x;
}

TimeSeries unforced_exact(const OscillatorParams &params,
                          const InitialState &ic, const TimeGrid &grid) {
    if (!(params.omega > 0.0))
        throw ValidationError("unforced_exact: omega must be positive");
    const std::size_t n = grid.size();
    const double c = (ic.v0 - params.sigma * ic.x0) / params.omega;

    TimeSeries out;
    out.grid = grid;
    out.values.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.time(i);
        out.values[i] = std::exp(params.sigma * t) *
                        (ic.x0 * std::cos(params.omega * t) +
                         c * std::sin(params.omega * t));
    }
    return out;
}

} // namespace paramres::sim
