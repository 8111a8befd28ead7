#pragma once

// Small signal metrics shared by the experiment harness and the test suites.

#include "paramres/time_series.hpp"

#include <optional>
#include <span>

namespace paramres::analysis {

/// ||a - truth||_2 / ||truth||_2. Throws ValidationError on length mismatch
/// or an all-zero reference.
double rel_rms_error(std::span<const double> a, std::span<const double> truth);

/// max |a_i - truth_i|.
double max_abs_error(std::span<const double> a, std::span<const double> truth);

struct LineFit {
    double intercept = 0.0;
    double slope = 0.0;
};

/// Ordinary least-squares line through (t, y).
LineFit fit_line(std::span<const double> t, std::span<const double> y);

/// Period of an oscillating trace: remove a fitted line, then average the
/// spacing of same-direction zero crossings (linear-interpolated times).
/// Empty when fewer than two full crossings are present.
std::optional<double> oscillation_period(std::span<const double> t,
                                         std::span<const double> y);

/// Dominant angular frequency as pi over the mean interval between sign
/// changes. Empty when the signal has fewer than three crossings.
std::optional<double> dominant_frequency(const TimeSeries &ts);

/// Slope of the least-squares line through (t, ln|y|), skipping samples with
/// |y| below floor_abs. Throws ValidationError when fewer than two usable
/// samples remain.
double exponential_rate(std::span<const double> t, std::span<const double> y,
                        double floor_abs = 1e-300);

} // namespace paramres::analysis
