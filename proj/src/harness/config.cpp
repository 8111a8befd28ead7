#include "paramres/harness/config.hpp"

#include "paramres/errors.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace paramres::harness {

OscillatorParams ExperimentConfig::params() const {
    return params_from_modal(zeta, omega_n, k_amp, cap_omega);
}

InitialState ExperimentConfig::initial_state() const {
    return a0_from_initial(x0, v0, params());
}

double ExperimentConfig::window_len() const {
    if (modal.window_len > 0.0)
        return modal.window_len;
    return 2.0 * 2.0 * 3.14159265358979323846 / params().omega;
}

void ExperimentConfig::validate() const {
    params();
    grid().validate();
    if (modal.model_order == 0 || modal.model_order > kMaxModelOrder)
        throw ValidationError("model order must be in [1, " +
                              std::to_string(kMaxModelOrder) + "]");
    if (!(modal.stride > 0.0))
        throw ValidationError("stride must be positive");
    if (modal.window_len < 0.0)
        throw ValidationError("window length must be nonnegative");
    if (steps < 2)
        throw ValidationError("sweep needs at least 2 steps");
    if (!(omega_max > omega_min))
        throw ValidationError("sweep range must satisfy omega_max > omega_min");
    if (workers == 0)
        throw ValidationError("workers must be >= 1");
}

ExperimentConfig load_config(const std::filesystem::path &file,
                             const ExperimentConfig &base) {
    std::ifstream in(file);
    if (!in)
        throw IoError("cannot open config file " + file.string());
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &e) {
        throw ValidationError("config parse error: " + std::string(e.what()));
    }
    if (!j.is_object())
        throw ValidationError("config must be a JSON object");

    ExperimentConfig cfg = base;
    for (const auto &[key, value] : j.items()) {
        try {
            if (key == "zeta")
                cfg.zeta = value.get<double>();
            else if (key == "omega_n")
                cfg.omega_n = value.get<double>();
            else if (key == "k")
                cfg.k_amp = value.get<double>();
            else if (key == "cap_omega")
                cfg.cap_omega = value.get<double>();
            else if (key == "x0")
                cfg.x0 = value.get<double>();
            else if (key == "v0")
                cfg.v0 = value.get<double>();
            else if (key == "t_end")
                cfg.t_end = value.get<double>();
            else if (key == "dt")
                cfg.dt = value.get<double>();
            else if (key == "window")
                cfg.modal.window_len = value.get<double>();
            else if (key == "stride")
                cfg.modal.stride = value.get<double>();
            else if (key == "order")
                cfg.modal.model_order = value.get<std::size_t>();
            else if (key == "out")
                cfg.out_dir = value.get<std::string>();
            else if (key == "omega_min")
                cfg.omega_min = value.get<double>();
            else if (key == "omega_max")
                cfg.omega_max = value.get<double>();
            else if (key == "steps")
                cfg.steps = value.get<std::size_t>();
            else if (key == "workers")
                cfg.workers = value.get<std::size_t>();
            else
                throw ValidationError("unknown config key '" + key + "'");
        } catch (const nlohmann::json::exception &e) {
            throw ValidationError("config key '" + key +
                                  "': " + std::string(e.what()));
        }
    }
    return cfg;
}

} // namespace paramres::harness
