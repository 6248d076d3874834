#pragma once

#include <vector>

#include "trajrisk/statmoments.hpp"
#include "trajrisk/types.hpp"

namespace trajrisk {

/// Spectral form of a quadratic form in a Gaussian:
///   Q(x) =d offset + sum_j lambda_j (z_j + delta_j)^2,  z_j iid N(0,1).
/// The offset is zero except when a covariance direction is degenerate and
/// the deterministic part of the form has been folded out.
struct QuadFormSpectrum {
  std::vector<double> lambdas;
  std::vector<double> deltas;
  double offset = 0.0;

  /// E[Q(x)] = offset + sum lambda_j (1 + delta_j^2).
  double mean() const;
};

struct CdfResult {
  double value = 0.0;
  /// Bound on the absolute numerical error (Imhof). NaN for LTZ, whose
  /// error is a property of the approximation, not of the evaluation.
  double abs_error_bound = 0.0;
  long evaluations = 0;
  /// Set when clamping to [0, 1] moved the value by more than 1e-8.
  bool clamped_beyond_tol = false;
};

/// Decompose x^T q x for x ~ N(mean, cov) into spectral form.
/// A covariance eigenvalue below 1e-12 collapses that direction into the
/// deterministic offset; if both eigenvalues are degenerate the position
/// is a point and DegenerateCovariance is thrown (callers should use the
/// indicator of Q(mean) <= level instead).
QuadFormSpectrum decompose(const Ellipsoid& q, const Eigen::Vector2d& mean,
                           const Eigen::Matrix2d& cov);

/// P(Q(x) <= q) by numerical inversion of the characteristic function
/// (Imhof). Guarantees total truncation + quadrature error <= tol, else
/// throws ConvergenceError. Valid for 1e-12 <= tol <= 1e-2.
CdfResult imhof_cdf(const QuadFormSpectrum& s, double q, double tol);

/// P(Q(x) <= q) by the Liu-Tang-Zhang noncentral chi-square surrogate
/// matched on skewness and kurtosis. Throws FallbackToImhof in the
/// near-symmetric regime (s1 <= 1e-12) where the surrogate is undefined.
CdfResult ltz_cdf(const QuadFormSpectrum& s, double q);

/// CDF of the noncentral chi-square distribution with `dof` degrees of
/// freedom (positive real) and noncentrality `nc`, via the Poisson-weighted
/// series of regularized incomplete gamma functions.
double noncentral_chi2_cdf(double x, double dof, double nc);

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

enum class CdfMethod { kImhof, kLtz };

struct GmmStepRisk {
  std::vector<double> per_mode;
  double mixture = 0.0;
  long evaluations = 0;
  bool clamped_beyond_tol = false;
};

/// Per-mode membership probabilities P(Q(x) <= 1 | mode) and their
/// weighted sum for a Gaussian mixture position. LTZ dispatches to Imhof
/// in its undefined regime; deterministic components use the indicator.
GmmStepRisk gmm_step_risk(const Mixture2& m, const Ellipsoid& e,
                          CdfMethod method, double imhof_tol = 1e-10);

}  // namespace trajrisk
