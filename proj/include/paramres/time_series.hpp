#pragma once

#include <cstddef>
#include <vector>

namespace paramres {

/// Uniform sampling grid. Sample i lives at t_start + i*dt;
/// the count is floor((t_end - t_start)/dt) + 1 (rounding-tolerant).
struct TimeGrid {
    double t_start = 0.0;
    double t_end = 0.0;
    double dt = 0.0;

    std::size_t size() const;
    double time(std::size_t i) const { return t_start + double(i) * dt; }

    /// Throws ValidationError unless dt > 0 and t_end > t_start.
    void validate() const;
};

/// Uniformly sampled real signal.
struct TimeSeries {
    TimeGrid grid;
    std::vector<double> values;

    std::size_t size() const { return values.size(); }
    double time(std::size_t i) const { return grid.time(i); }
};

} // namespace paramres
