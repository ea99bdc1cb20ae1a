#pragma once

#include <functional>

namespace cpvdw::quad {

struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-300;
  //! The integrand is assumed to decay like exp(-x / decay_scale).
  double decay_scale = 1.0;
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
};

//! Throws DomainError unless rel_tol is in (0, 1e-2], decay_scale > 0,
//! abs_tol >= 0 and max_subdivisions >= 1.
void validate(const QuadratureSpec &spec);

//! Integral of f over [0, inf) for smooth, exponentially decaying f.
//!
//! Gauss-Kronrod 10/21 panels on [0, X], X = 40 decay_scale, seeded with a
//! geometric partition towards the origin and refined by bisecting the
//! panel with the largest error first (ties broken by position, so the
//! panel sequence is deterministic). The neglected tail beyond X is
//! bounded from f(X) and the decay scale and added to the error estimate;
//! X is doubled while that bound dominates the tolerance.
//!
//! Throws IntegrandError on a non-finite f value and NumericalError (with
//! the best estimate) once max_subdivisions is exhausted.
QuadratureResult integrate_semiinf(const std::function<double(double)> &f,
                                   const QuadratureSpec &spec = {});

//! Finite interval variant used by the semi-infinite driver and tests.
QuadratureResult integrate_interval(const std::function<double(double)> &f,
                                    double a, double b,
                                    const QuadratureSpec &spec = {});

//! One 21-point Kronrod panel; `gauss` receives the embedded 10-point
//! Gauss estimate. Exposed for exactness tests.
double kronrod21(const std::function<double(double)> &f, double a, double b,
                 double *gauss = nullptr);

} // namespace cpvdw::quad
