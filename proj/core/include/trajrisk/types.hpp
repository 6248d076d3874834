#pragma once

#include <Eigen/Dense>
#include <vector>

namespace trajrisk {

/// Planar pose. Heading is stored unwrapped; no range restriction.
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;
};

/// Collision set {x : x^T q x <= 1} with q symmetric positive definite.
struct Ellipsoid {
  Eigen::Matrix2d q = Eigen::Matrix2d::Identity();
};

/// One Gaussian mode of a planar mixture.
struct GaussianComponent2 {
  Eigen::Vector2d mean = Eigen::Vector2d::Zero();
  Eigen::Matrix2d cov = Eigen::Matrix2d::Zero();
};

struct WeightedComponent2 {
  double weight = 1.0;
  GaussianComponent2 component;
};

/// Weighted Gaussian mixture over a 2-vector (position or control pair)
/// at one time step.
struct Mixture2 {
  std::vector<WeightedComponent2> components;
};

/// Tolerances shared by validation and construction.
inline constexpr double kWeightSumTol = 1e-9;
inline constexpr double kEigenvalueTol = 1e-12;

/// Validate and normalize an ellipsoid matrix: symmetric to 1e-12 relative,
/// both eigenvalues strictly positive. Throws ValidationError.
Ellipsoid make_ellipsoid(const Eigen::Matrix2d& q);

/// Validate a covariance: symmetric, eigenvalues >= -1e-12 (clamped to 0).
/// Returns the clamped matrix. Throws ValidationError.
Eigen::Matrix2d validate_covariance(const Eigen::Matrix2d& cov);

/// Validate mixture invariants: >= 1 component, weights >= 0 summing to
/// 1 +- 1e-9, PSD covariances (clamped in place).
void validate_mixture(Mixture2& m);

}  // namespace trajrisk
