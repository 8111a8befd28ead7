#include "paramres/harness/experiment.hpp"

#include "paramres/analysis.hpp"
#include "paramres/envelope.hpp"
#include "paramres/errors.hpp"
#include "paramres/harness/csv.hpp"
#include "paramres/harness/svg.hpp"
#include "paramres/integrate.hpp"

#include <json.hpp>

#include <atomic>
#include <cmath>
#include <filesystem>
#include <thread>

namespace paramres::harness {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::filesystem::path out_path(const ExperimentConfig &cfg,
                               const std::string &name) {
    std::filesystem::path dir(cfg.out_dir);
    if (!dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec)
            throw IoError("cannot create output directory " + dir.string() +
                          ": " + ec.message());
    }
    return dir / name;
}

std::vector<double> grid_times(const TimeGrid &grid) {
    std::vector<double> t(grid.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        t[i] = grid.time(i);
    return t;
}

/// Closed form matching the classified regime.
TimeSeries eval_matching_form(const OscillatorParams &p,
                              const InitialState &ic, const TimeGrid &grid,
                              const mms::ResonanceCase &rc) {
    switch (rc.tag) {
    case mms::CaseTag::Principal1:
        return mms::case1_eval(mms::case1_solution(p, ic), p, grid);
    case mms::CaseTag::Principal2:
        return mms::case2_eval(mms::case2_solution(p, ic), p, grid);
    case mms::CaseTag::Principal3:
        return mms::case3_eval(p, ic, grid,
                               p.cap_omega >= 2.0 * p.omega
                                   ? mms::Case3Branch::Plus
                                   : mms::Case3Branch::Minus);
    case mms::CaseTag::ZerothOrder:
        return mms::zeroth_eval(p, ic, grid);
    case mms::CaseTag::NonResonant:
        break;
    }
    throw ValidationError("no closed form for a non-resonant configuration");
}

/// Envelope beat frequency [rad/s] from the detrended log envelope.
std::optional<double> measure_envelope_frequency(const TimeSeries &ts) {
    try {
        const TimeSeries env = modal::envelope(ts);
        std::vector<double> t = grid_times(env.grid);
        std::vector<double> logv(env.values.size());
        for (std::size_t i = 0; i < logv.size(); ++i) {
            if (!(env.values[i] > 0.0))
                return std::nullopt;
            logv[i] = std::log(env.values[i]);
        }
        const auto period = analysis::oscillation_period(t, logv);
        if (!period || !(*period > 0.0))
            return std::nullopt;
        return 2.0 * kPi / *period;
    } catch (const Error &) {
        return std::nullopt;
    }
}

/// Envelope exponential rate [1/s] over the trailing part of the series.
std::optional<double> measure_envelope_rate(const TimeSeries &ts,
                                            double fit_start) {
    try {
        const TimeSeries env = modal::envelope(ts);
        std::vector<double> t, v;
        for (std::size_t i = 0; i < env.size(); ++i) {
            if (env.time(i) >= fit_start) {
                t.push_back(env.time(i));
                v.push_back(env.values[i]);
            }
        }
        return analysis::exponential_rate(t, v);
    } catch (const Error &) {
        return std::nullopt;
    }
}

nlohmann::json signature_json(const Signature &sig) {
    nlohmann::json j;
    j["kind"] = sig.kind;
    j["predicted"] = sig.predicted;
    if (sig.measured)
        j["measured"] = *sig.measured;
    return j;
}

void write_report_json(const std::filesystem::path &path,
                       const ComparisonReport &report) {
    nlohmann::json j;
    j["case"] = report.case_tag;
    j["discriminant"] = report.discriminant;
    j["warning"] = report.warning;
    if (report.warning)
        j["warning_reason"] = report.warning_reason;
    if (!report.warning) {
        j["rel_rms_error"] = report.rel_rms_error;
        j["max_abs_error"] = report.max_abs_error;
        if (report.max_envelope_error)
            j["max_envelope_error"] = *report.max_envelope_error;
    }
    if (report.signature)
        j["signature"] = signature_json(*report.signature);
    write_text_atomic(path, j.dump(2) + "\n");
}

void write_series_files(const ExperimentConfig &cfg, const std::string &stem,
                        const TimeSeries &ts, const std::string &value_name) {
    const std::vector<double> t = grid_times(ts.grid);
    write_csv(out_path(cfg, stem + ".csv"), {"t", value_name},
              {&t, &ts.values});
}

std::optional<Signature> make_signature(const OscillatorParams &p,
                                        const mms::ResonanceCase &rc,
                                        const TimeSeries &truth,
                                        double t_end) {
    Signature sig;
    switch (rc.tag) {
    case mms::CaseTag::Principal1:
        sig.kind = "beat_frequency";
        sig.predicted = std::sqrt(rc.discriminant);
        sig.measured = measure_envelope_frequency(truth);
        break;
    case mms::CaseTag::Principal2:
        sig.kind = "growth_exponent";
        sig.predicted = p.sigma + 0.5 * std::sqrt(-rc.discriminant);
        sig.measured = measure_envelope_rate(truth, 0.25 * t_end);
        break;
    case mms::CaseTag::ZerothOrder: {
        sig.kind = "modulation_period";
        sig.predicted = 2.0 * kPi / p.cap_omega;
        const auto freq = measure_envelope_frequency(truth);
        if (freq && *freq > 0.0)
            sig.measured = 2.0 * kPi / *freq;
        break;
    }
    default:
        // the boundary case grows linearly in t; no single rate describes it
        return std::nullopt;
    }
    return sig;
}

} // namespace

TimeSeries run_simulate(const ExperimentConfig &cfg) {
    cfg.validate();
    const TimeSeries ts =
        sim::integrate(cfg.params(), cfg.initial_state(), cfg.grid());
    write_series_files(cfg, "simulate", ts, "x");
    return ts;
}

TimeSeries run_mms(const ExperimentConfig &cfg) {
    cfg.validate();
    const OscillatorParams p = cfg.params();
    const InitialState ic = cfg.initial_state();
    const mms::ResonanceCase rc = mms::classify(p);
    const TimeSeries ts = eval_matching_form(p, ic, cfg.grid(), rc);
    write_series_files(cfg, "mms", ts, "x_mms");

    nlohmann::json j;
    j["case"] = mms::to_string(rc.tag);
    j["discriminant"] = rc.discriminant;
    if (rc.tag == mms::CaseTag::Principal1) {
        const auto sol = mms::case1_solution(p, ic);
        j["omega_k"] = sol.omega_k;
        j["omega_c"] = sol.omega_c;
        j["c1"] = sol.c1;
        j["c2"] = sol.c2;
        j["r1"] = sol.r1;
        j["r2"] = sol.r2;
    } else if (rc.tag == mms::CaseTag::Principal2) {
        const auto sol = mms::case2_solution(p, ic);
        j["omega_k"] = sol.omega_k;
        j["c3"] = sol.c3;
        j["c4"] = sol.c4;
        j["r3"] = sol.r3;
        j["r4"] = sol.r4;
    } else if (rc.tag == mms::CaseTag::Principal3) {
        j["branch"] = p.cap_omega >= 2.0 * p.omega ? "plus" : "minus";
    } else if (rc.tag == mms::CaseTag::ZerothOrder) {
        j["theta"] = std::atan2(p.omega, p.sigma);
        j["modulation_period"] = 2.0 * kPi / p.cap_omega;
    }
    write_text_atomic(out_path(cfg, "mms_solution.json"), j.dump(2) + "\n");
    return ts;
}

ComparisonReport run_compare(const ExperimentConfig &cfg) {
    cfg.validate();
    const OscillatorParams p = cfg.params();
    const InitialState ic = cfg.initial_state();
    const TimeGrid grid = cfg.grid();
    const TimeSeries truth = sim::integrate(p, ic, grid);
    const mms::ResonanceCase rc = mms::classify(p);

    ComparisonReport report;
    report.case_tag = mms::to_string(rc.tag);
    report.discriminant = rc.discriminant;

    TimeSeries approx;
    try {
        approx = eval_matching_form(p, ic, grid, rc);
    } catch (const Error &e) {
        report.warning = true;
        report.warning_reason = e.what();
        write_series_files(cfg, "simulate", truth, "x");
        write_report_json(out_path(cfg, "compare_report.json"), report);
        return report;
    }

    report.rel_rms_error =
        analysis::rel_rms_error(approx.values, truth.values);
    report.max_abs_error = analysis::max_abs_error(approx.values, truth.values);
    try {
        const TimeSeries env_true = modal::envelope(truth);
        const TimeSeries env_mms = modal::envelope(approx);
        report.max_envelope_error =
            analysis::max_abs_error(env_mms.values, env_true.values);
    } catch (const Error &) {
        // envelope metric omitted for signals without enough extrema
    }
    report.signature = make_signature(p, rc, truth, cfg.t_end);

    const std::vector<double> t = grid_times(grid);
    std::vector<double> abs_err(truth.size());
    for (std::size_t i = 0; i < abs_err.size(); ++i)
        abs_err[i] = std::abs(approx.values[i] - truth.values[i]);
    write_csv(out_path(cfg, "compare.csv"), {"t", "x_true", "x_mms", "abs_err"},
              {&t, &truth.values, &approx.values, &abs_err});
    write_report_json(out_path(cfg, "compare_report.json"), report);
    return report;
}

modal::DampingTrace run_damping(const ExperimentConfig &cfg) {
    cfg.validate();
    const TimeSeries ts =
        sim::integrate(cfg.params(), cfg.initial_state(), cfg.grid());
    const modal::DampingTrace trace = modal::sliding_damping(
        ts, cfg.window_len(), cfg.modal.stride, cfg.modal.model_order);

    std::vector<double> tc, zh, oh;
    for (const auto &e : trace) {
        tc.push_back(e.t_center);
        zh.push_back(e.zeta_hat);
        oh.push_back(e.omega_hat);
    }
    write_csv(out_path(cfg, "damping.csv"), {"t_center", "zeta_hat", "omega_hat"},
              {&tc, &zh, &oh});
    return trace;
}

std::vector<SweepRow> run_sweep(const ExperimentConfig &cfg) {
    cfg.validate();
    const std::size_t n = cfg.steps;
    std::vector<SweepRow> rows(n);

    auto compute_row = [&cfg, n](std::size_t i) {
        SweepRow row;
        row.omega_cap = cfg.omega_min + (cfg.omega_max - cfg.omega_min) *
                                            double(i) / double(n - 1);
        try {
            const OscillatorParams p = params_from_modal(
                cfg.zeta, cfg.omega_n, cfg.k_amp, row.omega_cap);
            const InitialState ic = a0_from_initial(cfg.x0, cfg.v0, p);
            const mms::ResonanceCase rc = mms::classify(p);
            row.case_tag = mms::to_string(rc.tag);
            row.discriminant = rc.discriminant;

            std::optional<double> measured;
            switch (rc.tag) {
            case mms::CaseTag::Principal1:
                row.predicted_rate = std::sqrt(rc.discriminant);
                break;
            case mms::CaseTag::Principal2:
                row.predicted_rate =
                    p.sigma + 0.5 * std::sqrt(-rc.discriminant);
                break;
            case mms::CaseTag::ZerothOrder:
                row.predicted_rate = p.cap_omega;
                break;
            default:
                row.predicted_rate = p.sigma;
                break;
            }

            const TimeSeries ts = sim::integrate(p, ic, cfg.grid());
            if (rc.tag == mms::CaseTag::Principal1 ||
                rc.tag == mms::CaseTag::ZerothOrder)
                measured = measure_envelope_frequency(ts);
            else
                measured = measure_envelope_rate(ts, 0.25 * cfg.t_end);

            if (measured) {
                row.measured_rate = *measured;
            } else {
                row.measured_rate = std::nan("");
                row.flag = "unmeasured";
            }
        } catch (const Error &e) {
            row.measured_rate = std::nan("");
            row.flag = e.what();
        }
        return row;
    };

    const std::size_t workers = std::min<std::size_t>(cfg.workers, n);
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            rows[i] = compute_row(i);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = next.fetch_add(1); i < n;
                     i = next.fetch_add(1))
                    rows[i] = compute_row(i);
            });
        for (auto &th : pool)
            th.join();
    }

    std::string body =
        "omega_cap,case,discriminant,predicted_rate,measured_rate,flag\n";
    for (const auto &row : rows) {
        body += format_double(row.omega_cap) + ',' + row.case_tag + ',' +
                format_double(row.discriminant) + ',' +
                format_double(row.predicted_rate) + ',' +
                format_double(row.measured_rate) + ',' + row.flag + '\n';
    }
    write_text_atomic(out_path(cfg, "sweep.csv"), body);
    return rows;
}

void run_figures(const ExperimentConfig &base, const std::string &preset) {
    base.validate();
    ExperimentConfig cfg = base;
    cfg.x0 = 1.0;
    cfg.v0 = 0.0;

    const std::string blue = "#1f77b4", red = "#d62728", green = "#2ca02c";

    auto response_with_envelope = [&](double omega_cap, double t_end,
                                      const std::string &stem,
                                      const std::string &title) {
        cfg.cap_omega = omega_cap;
        cfg.t_end = t_end;
        const TimeSeries ts =
            sim::integrate(cfg.params(), cfg.initial_state(), cfg.grid());
        const TimeSeries env = modal::envelope(ts);
        const std::vector<double> t = grid_times(ts.grid);
        write_csv(out_path(cfg, stem + "_response.csv"), {"t", "x"},
                  {&t, &ts.values});
        write_csv(out_path(cfg, stem + "_envelope.csv"), {"t", "x"},
                  {&t, &env.values});
        write_svg_plot(out_path(cfg, stem + ".svg"), title, "t [s]", "x",
                       {{"response", blue, &t, &ts.values},
                        {"envelope", red, &t, &env.values}});
    };

    auto damping_trace = [&](double omega_cap, double t_end,
                             const std::string &stem,
                             const std::string &title) {
        cfg.cap_omega = omega_cap;
        cfg.t_end = t_end;
        const TimeSeries ts =
            sim::integrate(cfg.params(), cfg.initial_state(), cfg.grid());
        const modal::DampingTrace trace = modal::sliding_damping(
            ts, cfg.window_len(), cfg.modal.stride, cfg.modal.model_order);
        std::vector<double> tc, zh, oh;
        for (const auto &e : trace) {
            tc.push_back(e.t_center);
            zh.push_back(e.zeta_hat);
            oh.push_back(e.omega_hat);
        }
        write_csv(out_path(cfg, stem + "_damping.csv"),
                  {"t_center", "zeta_hat", "omega_hat"}, {&tc, &zh, &oh});
        write_svg_plot(out_path(cfg, stem + ".svg"), title, "t [s]",
                       "estimated damping ratio",
                       {{"zeta_hat", green, &tc, &zh}});
    };

    auto comparison = [&](double omega_cap, double t_end,
                          const std::string &stem, const std::string &title) {
        cfg.cap_omega = omega_cap;
        cfg.t_end = t_end;
        const OscillatorParams p = cfg.params();
        const InitialState ic = cfg.initial_state();
        const TimeSeries truth = sim::integrate(p, ic, cfg.grid());
        const TimeSeries approx =
            eval_matching_form(p, ic, cfg.grid(), mms::classify(p));
        const std::vector<double> t = grid_times(cfg.grid());
        std::vector<double> abs_err(truth.size());
        for (std::size_t i = 0; i < abs_err.size(); ++i)
            abs_err[i] = std::abs(approx.values[i] - truth.values[i]);
        write_csv(out_path(cfg, stem + "_compare.csv"),
                  {"t", "x_true", "x_mms", "abs_err"},
                  {&t, &truth.values, &approx.values, &abs_err});
        write_svg_plot(out_path(cfg, stem + ".svg"), title, "t [s]", "x",
                       {{"true response", blue, &t, &truth.values},
                        {"closed form", red, &t, &approx.values}});
    };

    if (preset == "fig1")
        response_with_envelope(6.9115, 40.0, "fig1",
                               "Principal resonance: response");
    else if (preset == "fig2")
        damping_trace(6.9115, 40.0, "fig2",
                      "Principal resonance: measured damping ratio");
    else if (preset == "fig3")
        comparison(6.9115, 40.0, "fig3",
                   "True vs closed form: beating regime");
    else if (preset == "fig4")
        comparison(7.5524, 60.0, "fig4", "True vs closed form: growth regime");
    else if (preset == "fig5")
        comparison(7.3639, 30.0, "fig5",
                   "True vs closed form: boundary regime");
    else if (preset == "fig6")
        response_with_envelope(0.6283, 60.0, "fig6",
                               "Slow-pump resonance: response");
    else if (preset == "fig7")
        damping_trace(0.6283, 60.0, "fig7",
                      "Slow-pump resonance: measured damping ratio");
    else if (preset == "fig8")
        comparison(0.6283, 60.0, "fig8", "True vs closed form: slow pump");
    else
        throw ValidationError("unknown figure preset '" + preset +
                              "' (expected fig1..fig8)");
}

} // namespace paramres::harness
