#pragma once

#include "paramres/harness/config.hpp"
#include "paramres/mms.hpp"
#include "paramres/prony.hpp"
#include "paramres/time_series.hpp"

#include <optional>
#include <string>
#include <vector>

namespace paramres::harness {

/// Regime signature derived from the simulated response: the beat frequency
/// (beating regime), the envelope growth exponent (growth regime), or the
/// damping-modulation period (slow-pump regime).
struct Signature {
    std::string kind;
    double predicted = 0.0;
    std::optional<double> measured;
};

struct ComparisonReport {
    std::string case_tag;
    double discriminant = 0.0;
    double rel_rms_error = 0.0;
    double max_abs_error = 0.0;
    std::optional<double> max_envelope_error;
    std::optional<Signature> signature;
    bool warning = false;
    std::string warning_reason;
};

struct SweepRow {
    double omega_cap = 0.0;
    std::string case_tag;
    double discriminant = 0.0;
    double predicted_rate = 0.0;
    double measured_rate = 0.0; // NaN when flagged
    std::string flag;           // empty when the row is clean
};

/// Integrate and write simulate.csv (t,x). Divergence propagates with the
/// blow-up time attached.
TimeSeries run_simulate(const ExperimentConfig &cfg);

/// Classify and evaluate the matching closed form; writes mms.csv (t,x_mms)
/// and mms_solution.json. Throws ValidationError for a non-resonant
/// configuration.
TimeSeries run_mms(const ExperimentConfig &cfg);

/// Integrate, classify, evaluate the matching closed form and compare.
/// Writes compare.csv (t,x_true,x_mms,abs_err) and compare_report.json;
/// a configuration without a usable closed form degrades to simulate.csv
/// plus a warning-flagged report.
ComparisonReport run_compare(const ExperimentConfig &cfg);

/// Integrate and slide the pole estimator; writes damping.csv
/// (t_center,zeta_hat,omega_hat).
modal::DampingTrace run_damping(const ExperimentConfig &cfg);

/// Per-pump-frequency classification plus predicted and measured envelope
/// rates; writes sweep.csv. Rows are computed in parallel (cfg.workers) with
/// deterministic ordering.
std::vector<SweepRow> run_sweep(const ExperimentConfig &cfg);

/// One-command reproduction presets fig1..fig8 (responses with envelopes,
/// damping traces, and true-vs-closed-form overlays); writes CSV plus SVG.
void run_figures(const ExperimentConfig &cfg, const std::string &preset);

} // namespace paramres::harness
