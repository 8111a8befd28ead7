#pragma once

#include "paramres/oscillator.hpp"
#include "paramres/time_series.hpp"

#include <cstddef>
#include <filesystem>
#include <string>

namespace paramres::harness {

/// Sliding-window estimator settings. window_len = 0 means "two carrier
/// periods of the configured oscillator".
struct ModalSettings {
    double window_len = 0.0; ///< [s]
    double stride = 0.25;    ///< [s]
    std::size_t model_order = 2;
};

inline constexpr std::size_t kMaxModelOrder = 12;

/// One experiment recipe: oscillator, initial state, grid, estimator and
/// output settings. Defaults reproduce the principal-resonance beating case.
struct ExperimentConfig {
    double zeta = 0.0098;
    double omega_n = 3.8072;  ///< [rad/s]
    double k_amp = 0.5;       ///< [1/s]
    double cap_omega = 6.9115; ///< [rad/s]
    double x0 = 1.0;
    double v0 = 0.0;
    double t_end = 40.0; ///< [s]
    double dt = 1e-3;    ///< [s]
    ModalSettings modal;
    std::string out_dir = ".";

    // sweep-only settings
    double omega_min = 6.5;
    double omega_max = 8.5;
    std::size_t steps = 201;
    std::size_t workers = 1;

    /// Validated oscillator parameters (throws ValidationError).
    OscillatorParams params() const;
    InitialState initial_state() const;
    TimeGrid grid() const { return TimeGrid{0.0, t_end, dt}; }
    /// Concrete window length: explicit setting or two carrier periods.
    double window_len() const;

    /// Additional cross-field checks (order bound, sweep ranges).
    void validate() const;
};

/// Load a flat JSON config whose keys mirror the CLI flags:
/// zeta, omega_n, k, cap_omega, x0, v0, t_end, dt, window, stride, order,
/// out, omega_min, omega_max, steps, workers. Unknown keys are rejected;
/// keys absent from the file keep the values of base.
ExperimentConfig load_config(const std::filesystem::path &file,
                             const ExperimentConfig &base = {});

} // namespace paramres::harness
