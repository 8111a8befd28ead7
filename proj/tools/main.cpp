// paramres CLI: simulate, closed-form evaluation, comparison, damping traces,
// pump-frequency sweeps and figure presets for the damping-modulated
// oscillator. All file formats are documented in the README.

#include "paramres/errors.hpp"
#include "paramres/harness/config.hpp"
#include "paramres/harness/experiment.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using paramres::harness::ExperimentConfig;

struct CliValues {
    std::optional<double> zeta, omega_n, k, cap_omega, x0, v0, t_end, dt;
    std::optional<double> window, stride;
    std::optional<std::size_t> order;
    std::optional<double> omega_min, omega_max;
    std::optional<std::size_t> steps, workers;
    std::optional<std::string> out, config;
    std::string preset;
};

void add_shared_options(CLI::App *cmd, CliValues &v) {
    cmd->add_option("--zeta", v.zeta, "damping ratio in [0,1)");
    cmd->add_option("--omega-n", v.omega_n, "natural frequency [rad/s]");
    cmd->add_option("--k", v.k, "damping modulation amplitude [1/s]");
    cmd->add_option("--cap-omega", v.cap_omega,
                    "damping modulation frequency [rad/s]");
    cmd->add_option("--x0", v.x0, "initial displacement");
    cmd->add_option("--v0", v.v0, "initial velocity [1/s]");
    cmd->add_option("--t-end", v.t_end, "simulation end time [s]");
    cmd->add_option("--dt", v.dt, "integration step [s]");
    cmd->add_option("--out", v.out, "output directory");
    cmd->add_option("--config", v.config, "JSON config file");
}

void add_modal_options(CLI::App *cmd, CliValues &v) {
    cmd->add_option("--window", v.window,
                    "estimator window [s] (default: two carrier periods)");
    cmd->add_option("--stride", v.stride, "window stride [s]");
    cmd->add_option("--order", v.order, "prediction model order (<= 12)");
}

ExperimentConfig build_config(const CliValues &v) {
    ExperimentConfig base;
    if (const char *env = std::getenv("PARAMRES_OUT"); env && *env)
        base.out_dir = env;

    ExperimentConfig cfg =
        v.config ? paramres::harness::load_config(*v.config, base) : base;

    if (v.zeta)
        cfg.zeta = *v.zeta;
    if (v.omega_n)
        cfg.omega_n = *v.omega_n;
    if (v.k)
        cfg.k_amp = *v.k;
    if (v.cap_omega)
        cfg.cap_omega = *v.cap_omega;
    if (v.x0)
        cfg.x0 = *v.x0;
    if (v.v0)
        cfg.v0 = *v.v0;
    if (v.t_end)
        cfg.t_end = *v.t_end;
    if (v.dt)
        cfg.dt = *v.dt;
    if (v.window)
        cfg.modal.window_len = *v.window;
    if (v.stride)
        cfg.modal.stride = *v.stride;
    if (v.order)
        cfg.modal.model_order = *v.order;
    if (v.omega_min)
        cfg.omega_min = *v.omega_min;
    if (v.omega_max)
        cfg.omega_max = *v.omega_max;
    if (v.steps)
        cfg.steps = *v.steps;
    if (v.workers)
        cfg.workers = *v.workers;
    if (v.out)
        cfg.out_dir = *v.out;
    return cfg;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"paramres: simulation and closed-form analysis of an "
                 "oscillator with periodically modulated damping"};
    app.require_subcommand(1);
    CliValues v;

    CLI::App *cmd_simulate = app.add_subcommand(
        "simulate", "integrate the oscillator and write t,x CSV");
    add_shared_options(cmd_simulate, v);

    CLI::App *cmd_mms = app.add_subcommand(
        "mms", "evaluate the closed form for the classified regime");
    add_shared_options(cmd_mms, v);

    CLI::App *cmd_compare = app.add_subcommand(
        "compare", "integrate, evaluate the closed form, and report errors");
    add_shared_options(cmd_compare, v);

    CLI::App *cmd_damping = app.add_subcommand(
        "damping", "sliding-window damping-ratio trace of the response");
    add_shared_options(cmd_damping, v);
    add_modal_options(cmd_damping, v);

    CLI::App *cmd_sweep = app.add_subcommand(
        "sweep", "classify and measure rates across pump frequencies");
    add_shared_options(cmd_sweep, v);
    cmd_sweep->add_option("--omega-min", v.omega_min,
                          "sweep start [rad/s]");
    cmd_sweep->add_option("--omega-max", v.omega_max, "sweep end [rad/s]");
    cmd_sweep->add_option("--steps", v.steps, "number of sweep points (>= 2)");
    cmd_sweep->add_option("--workers", v.workers, "parallel sweep workers");

    CLI::App *cmd_figures =
        app.add_subcommand("figures", "one-command reproduction presets");
    add_shared_options(cmd_figures, v);
    cmd_figures->add_option("--preset", v.preset, "fig1..fig8")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const ExperimentConfig cfg = build_config(v);

        if (cmd_simulate->parsed()) {
            const auto ts = paramres::harness::run_simulate(cfg);
            std::cout << "wrote " << cfg.out_dir << "/simulate.csv ("
                      << ts.size() << " samples)\n";
        } else if (cmd_mms->parsed()) {
            const auto ts = paramres::harness::run_mms(cfg);
            std::cout << "wrote " << cfg.out_dir << "/mms.csv (" << ts.size()
                      << " samples) and mms_solution.json\n";
        } else if (cmd_compare->parsed()) {
            const auto report = paramres::harness::run_compare(cfg);
            std::cout << "case=" << report.case_tag
                      << " discriminant=" << report.discriminant << "\n";
            if (report.warning) {
                std::cout << "warning: " << report.warning_reason << "\n"
                          << "wrote " << cfg.out_dir
                          << "/simulate.csv and compare_report.json\n";
            } else {
                std::cout << "rel_rms_error=" << report.rel_rms_error
                          << " max_abs_error=" << report.max_abs_error << "\n";
                if (report.signature) {
                    std::cout << report.signature->kind
                              << ": predicted=" << report.signature->predicted;
                    if (report.signature->measured)
                        std::cout << " measured="
                                  << *report.signature->measured;
                    std::cout << "\n";
                }
                std::cout << "wrote " << cfg.out_dir
                          << "/compare.csv and compare_report.json\n";
            }
        } else if (cmd_damping->parsed()) {
            const auto trace = paramres::harness::run_damping(cfg);
            std::cout << "wrote " << cfg.out_dir << "/damping.csv ("
                      << trace.size() << " windows)\n";
        } else if (cmd_sweep->parsed()) {
            const auto rows = paramres::harness::run_sweep(cfg);
            std::cout << "wrote " << cfg.out_dir << "/sweep.csv ("
                      << rows.size() << " rows)\n";
        } else if (cmd_figures->parsed()) {
            paramres::harness::run_figures(cfg, v.preset);
            std::cout << "wrote " << v.preset << " files to " << cfg.out_dir
                      << "\n";
        }
        return 0;
    } catch (const paramres::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const paramres::DivergenceError &e) {
        std::cerr << "error: " << e.what()
                  << " (blow-up at t=" << e.t_blowup() << " s)\n";
        return 3;
    } catch (const paramres::IoError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const paramres::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
