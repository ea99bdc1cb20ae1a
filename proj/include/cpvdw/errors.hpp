#pragma once

#include <stdexcept>
#include <string>

namespace cpvdw {

//! Argument outside the domain of validity (negative frequency, z <= 0, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

//! Malformed or ambiguous user input (atom files, grid specs, flags).
class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

//! A requested channel/regime combination has no closed form.
class UnsupportedError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

//! Numerical failure. Carries the best estimate reached before giving up.
class NumericalError : public std::runtime_error {
public:
  NumericalError(const std::string &what, double best_estimate = 0.0,
                 double error_bound = 0.0)
      : std::runtime_error(what), best_estimate_(best_estimate),
        error_bound_(error_bound) {}

  double best_estimate() const { return best_estimate_; }
  double error_bound() const { return error_bound_; }

private:
  double best_estimate_;
  double error_bound_;
};

} // namespace cpvdw

namespace cpvdw {

//! The integrand returned NaN or Inf.
class IntegrandError : public NumericalError {
public:
  IntegrandError(const std::string &what, double abscissa)
      : NumericalError(what), abscissa_(abscissa) {}
  double abscissa() const { return abscissa_; }

private:
  double abscissa_;
};

} // namespace cpvdw
