#pragma once

// Prony pole identification: fit a window as a sum of complex exponentials
// via linear prediction, polynomial rooting, and a linear amplitude solve.

#include "paramres/time_series.hpp"

#include <cstddef>
#include <vector>

namespace paramres::modal {

/// One damped oscillatory mode e^{lambda_re t} cos(lambda_im t + phase).
/// Conjugate pole pairs are collapsed, so lambda_im >= 0.
struct ModeEstimate {
    double lambda_re = 0.0;  ///< decay rate [1/s]
    double lambda_im = 0.0;  ///< angular frequency [rad/s], >= 0
    double amplitude = 0.0;  ///< real signal amplitude, >= 0
    double phase = 0.0;      ///< [rad]
    double energy = 0.0;     ///< relative reconstruction energy in [0,1]
};

/// Continuous poles |lambda_re| beyond this bound are treated as numerical
/// artifacts of the rooting step and dropped.
inline constexpr double kMaxPoleRate = 50.0;

/// Least-squares Prony fit of one uniformly sampled window.
///
/// model_order is the number of prediction poles (two per oscillatory mode);
/// orders beyond the signal content are handled by a truncated prediction
/// solve plus the pole-radius filter. Requires at least 2*model_order + 1
/// samples. Throws IllConditionedError for windows with no usable content
/// (e.g. an all-zero window). Modes are returned sorted by energy,
/// descending.
std::vector<ModeEstimate> prony_fit(const TimeSeries &window,
                                    std::size_t model_order);

/// Damping ratio -lambda_re / |lambda| of a mode.
/// Throws SingularityError for a zero-magnitude pole.
double damping_ratio_of(const ModeEstimate &mode);

struct DampingTraceEntry {
    double t_center = 0.0;  ///< window center [s]
    double zeta_hat = 0.0;  ///< estimated damping ratio
    double omega_hat = 0.0; ///< estimated angular frequency [rad/s], > 0
};

/// Sequence of per-window damping/frequency estimates; t_center strictly
/// increasing, windows that failed to fit are simply absent.
using DampingTrace = std::vector<DampingTraceEntry>;

/// Slide a window of window_len seconds by stride seconds, Prony-fit each
/// position, and keep the dominant mode whose frequency lies within +-30%
/// of the series' dominant frequency (ties broken by proximity to the
/// previous window's estimate).
DampingTrace sliding_damping(const TimeSeries &ts, double window_len,
                             double stride, std::size_t model_order);

} // namespace paramres::modal
