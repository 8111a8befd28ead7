#pragma once

#include "paramres/time_series.hpp"

namespace paramres::modal {

/// Upper envelope of an oscillatory signal: local maxima of |x| (refined by
/// parabolic interpolation) joined with a monotone cubic, evaluated back on
/// the original grid and clamped outside the first/last peak.
/// Throws EnvelopeError when the signal has fewer than three sign changes
/// or fewer than two usable peaks.
TimeSeries envelope(const TimeSeries &ts);

} // namespace paramres::modal
