#pragma once

#include <functional>

namespace trajrisk {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  long evaluations = 0;
  bool converged = false;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to an
/// absolute tolerance. Stops early when the evaluation budget is reached;
/// `converged` reports whether the error estimate met the tolerance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    long max_evaluations = 1000000);

}  // namespace trajrisk
