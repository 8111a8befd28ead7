#pragma once

#include "paramres/oscillator.hpp"
#include "paramres/time_series.hpp"

namespace paramres::sim {

/// State magnitude beyond which integration aborts with DivergenceError.
inline constexpr double kDivergenceGuard = 1e12;

/// Integrate x'' + (-2*sigma + K*cos(cap_omega*t)) x' + (sigma^2+omega^2) x = 0
/// with the classical fixed-step 4th-order Runge-Kutta scheme. The modulated
/// damping coefficient is evaluated at the sub-stage times inside each step.
///
/// Throws DivergenceError (carrying the blow-up time) if |x| or |x'| exceeds
/// kDivergenceGuard; growing responses are legitimate, the caller chooses
/// t_end accordingly.
TimeSeries integrate(const OscillatorParams &params, const InitialState &ic,
                     const TimeGrid &grid);

/// Displacement and velocity samples of the same integration.
struct StateSeries {
    TimeSeries x;
    TimeSeries v;
};

StateSeries integrate_full(const OscillatorParams &params,
                           const InitialState &ic, const TimeGrid &grid);

/// Exact solution of the unforced system (K ignored):
/// x(t) = exp(sigma t) [x0 cos(omega t) + ((v0 - sigma x0)/omega) sin(omega t)].
TimeSeries unforced_exact(const OscillatorParams &params,
                          const InitialState &ic, const TimeGrid &grid);

} // namespace paramres::sim
