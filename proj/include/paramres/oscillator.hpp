#pragma once

// Domain types for the damping-modulated 1-DOF oscillator
//
//   x'' + (-2*sigma + K*cos(cap_omega*t)) x' + (sigma^2 + omega^2) x = 0
//
// and the conversions between the modal parameterization (zeta, omega_n)
// and the eigenvalue parameterization (sigma, omega).

namespace paramres {

/// Physical parameters of the modulated oscillator.
///
/// The unforced (K = 0) eigenvalues are lambda = sigma +/- j*omega with
/// sigma = -zeta*omega_n and omega = omega_n*sqrt(1 - zeta^2). A stable
/// unforced system has sigma < 0.
struct OscillatorParams {
    double zeta = 0.0;      ///< damping ratio, 0 <= zeta < 1
    double omega_n = 0.0;   ///< natural angular frequency [rad/s]
    double sigma = 0.0;     ///< real part of eigenvalue [1/s]
    double omega = 0.0;     ///< damped angular frequency [rad/s]
    double k_amp = 0.0;     ///< damping modulation amplitude K [1/s]
    double cap_omega = 0.0; ///< damping modulation angular frequency [rad/s]
};

/// Initial conditions, both physical and as the complex slow amplitude
/// A0 = a_re0 + j*a_im0 of the carrier decomposition
/// x = A*exp((sigma+j*omega)t) + conj.
struct InitialState {
    double x0 = 0.0;    ///< initial displacement
    double v0 = 0.0;    ///< initial velocity [1/s]
    double a_re0 = 0.0; ///< Re A0
    double a_im0 = 0.0; ///< Im A0
};

/// Bookkeeping scales of the two-timescale expansion. All end results are
/// epsilon-free; this exists so that independence from epsilon can be
/// checked explicitly.
struct MmsScaling {
    double epsilon = 1.0; ///< small parameter, > 0
    double k_eps = 0.0;   ///< K / epsilon
    double xi = 0.0;      ///< detuning / epsilon

    /// Scaling for the near-2*omega regime: xi = (cap_omega - 2*omega)/eps.
    static MmsScaling principal(const OscillatorParams &p, double epsilon);
    /// Scaling for the near-zero regime: xi = cap_omega/eps.
    static MmsScaling zeroth(const OscillatorParams &p, double epsilon);
};

/// Build validated parameters from the modal description.
/// Throws ValidationError for zeta outside [0,1), omega_n <= 0,
/// k_amp < 0 or cap_omega < 0.
OscillatorParams params_from_modal(double zeta, double omega_n, double k_amp,
                                   double cap_omega);

/// Map physical initial conditions (x0, v0) to the complex amplitude A0:
/// a_re0 = x0/2, a_im0 = (sigma*x0 - v0)/(2*omega).
/// Throws SingularityError when omega == 0.
InitialState a0_from_initial(double x0, double v0, const OscillatorParams &p);

/// Damping ratio of an eigenvalue sigma + j*omega: -sigma/sqrt(sigma^2+omega^2).
double damping_ratio(double sigma, double omega);

/// Natural frequency of an eigenvalue sigma + j*omega: sqrt(sigma^2+omega^2).
double natural_frequency(double sigma, double omega);

} // namespace paramres
