#pragma once

#include <stdexcept>
#include <string>

namespace paramres {

/// Base class for all toolkit errors.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string &what) : std::runtime_error(what) {}
};

/// Invalid user-supplied parameter (bad range, inconsistent config).
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string &what) : Error(what) {}
};

/// A formula hit a genuine singularity (division by a vanishing quantity).
class SingularityError : public Error {
  public:
    explicit SingularityError(const std::string &what) : Error(what) {}
};

/// Numerical integration blew past the divergence guard.
/// Carries the time at which the state stopped being representable.
class DivergenceError : public Error {
  public:
    DivergenceError(const std::string &what, double t_blowup)
        : Error(what), t_blowup_(t_blowup) {}
    double t_blowup() const { return t_blowup_; }

  private:
    double t_blowup_;
};

/// Closed-form coefficients evaluated outside their numeric domain.
class CoefficientDomainError : public Error {
  public:
    explicit CoefficientDomainError(const std::string &what) : Error(what) {}
};

/// The least-squares problem of a fit window is rank deficient.
class IllConditionedError : public Error {
  public:
    explicit IllConditionedError(const std::string &what) : Error(what) {}
};

/// Signal has too little structure to define an envelope.
class EnvelopeError : public Error {
  public:
    explicit EnvelopeError(const std::string &what) : Error(what) {}
};

/// File output failed.
class IoError : public Error {
  public:
    explicit IoError(const std::string &what) : Error(what) {}
};

} // namespace paramres
