#include "paramres/oscillator.hpp"

#include "paramres/errors.hpp"

#include <cmath>
#include <string>

namespace paramres {

OscillatorParams params_from_modal(double zeta, double omega_n, double k_amp,
                                   double cap_omega) {
    if (!(zeta >= 0.0 && zeta < 1.0))
        throw ValidationError("zeta must be in [0, 1), got " +
                              std::to_string(zeta));
    if (!(omega_n > 0.0))
        throw ValidationError("omega_n must be positive, got " +
                              std::to_string(omega_n));
    if (!(k_amp >= 0.0))
        throw ValidationError("k_amp must be nonnegative, got " +
                              std::to_string(k_amp));
    if (!(cap_omega >= 0.0))
        throw ValidationError("cap_omega must be nonnegative, got " +
                              std::to_string(cap_omega));

    OscillatorParams p;
    p.zeta = zeta;
    p.omega_n = omega_n;
    p.sigma = -zeta * omega_n;
    p.omega = omega_n * std::sqrt(1.0 - zeta * zeta);
    p.k_amp = k_amp;
    p.cap_omega = cap_omega;
    return p;
}

InitialState a0_from_initial(double x0, double v0, const OscillatorParams &p) {
    if (p.omega == 0.0)
        throw SingularityError("a0_from_initial: omega = 0 has no complex "
                               "amplitude decomposition");
    InitialState ic;
    ic.x0 = x0;
    ic.v0 = v0;
    ic.a_re0 = 0.5 * x0;
    ic.a_im0 = (p.sigma * x0 - v0) / (2.0 * p.omega);
    return ic;
}

double damping_ratio(double sigma, double omega) {
    const double mag = std::hypot(sigma, omega);
    if (mag == 0.0)
        throw SingularityError("damping_ratio: zero-magnitude eigenvalue");
    return -sigma / mag;
}

double natural_frequency(double sigma, double omega) {
    return std::hypot(sigma, omega);
}

MmsScaling MmsScaling::principal(const OscillatorParams &p, double epsilon) {
    if (!(epsilon > 0.0))
        throw ValidationError("epsilon must be positive");
    return MmsScaling{epsilon, p.k_amp / epsilon,
                      (p.cap_omega - 2.0 * p.omega) / epsilon};
}

MmsScaling MmsScaling::zeroth(const OscillatorParams &p, double epsilon) {
    if (!(epsilon > 0.0))
        throw ValidationError("epsilon must be positive");
    return MmsScaling{epsilon, p.k_amp / epsilon, p.cap_omega / epsilon};
}

} // namespace paramres
