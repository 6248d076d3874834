#pragma once

#include <complex>
#include <vector>

#include "trajrisk/types.hpp"

namespace trajrisk {

/// Hard cap on raw and trigonometric moment orders. Covers SOS bounds up
/// to degree 8 on a quadratic constraint (position moments to order 16).
inline constexpr int kMaxMomentOrder = 16;

/// Scalar distribution with finite moments of all orders: a Gaussian or a
/// finite Gaussian mixture. A plain Gaussian is a one-component mixture.
class ScalarDist {
 public:
  struct Component {
    double weight;
    double mean;
    double variance;
  };

  static ScalarDist gaussian(double mean, double variance);
  static ScalarDist mixture(const std::vector<Component>& components);

  const std::vector<Component>& components() const { return components_; }
  bool is_gaussian() const { return components_.size() == 1; }
  double mean() const;
  double variance() const;

 private:
  explicit ScalarDist(std::vector<Component> components)
      : components_(std::move(components)) {}
  std::vector<Component> components_;
};

using CharacteristicFunctionValue = std::complex<double>;

/// Characteristic function E[exp(i t X)]. For a Gaussian component this is
/// exp(i mu t - sigma^2 t^2 / 2); mixtures are the weighted sum.
CharacteristicFunctionValue char_eval(const ScalarDist& d, double t);

/// Raw moments E[X^j] for j = 0..order. Gaussian components use the
/// two-term recursion m_j = mu m_{j-1} + (j-1) sigma^2 m_{j-2}; mixtures
/// are weighted sums. Throws OrderError for order > kMaxMomentOrder.
std::vector<double> raw_moments_1d(const ScalarDist& d, int order);

/// All raw moments E[x^a y^b] with a + b <= order of a planar random
/// vector, indexed by the exponent pair.
class MomentArray2 {
 public:
  MomentArray2() = default;
  explicit MomentArray2(int order);

  int order() const { return order_; }
  double& at(int a, int b);
  double at(int a, int b) const;

  /// Mean vector (order >= 1).
  Eigen::Vector2d mean() const;
  /// Central covariance matrix (order >= 2).
  Eigen::Matrix2d covariance() const;

 private:
  int order_ = -1;
  std::vector<double> values_;
};

/// Exact raw moments of a bivariate Gaussian via the two-variable
/// recursion on partial derivatives of the moment generating function.
MomentArray2 mvg_raw_moments(const Eigen::Vector2d& mean,
                             const Eigen::Matrix2d& cov, int order);

/// Entrywise weighted sum of component Gaussian moments.
MomentArray2 mixture_moments_2d(const Mixture2& m, int order);

/// E[cos^m(X) sin^n(X)], assembled from the characteristic function at
/// integer arguments. The complex assembly must cancel to a real value;
/// an imaginary residual above 1e-10 raises NumericError.
double trig_moment(const ScalarDist& d, int m, int n);

/// Table of E[w^a cos^m(theta) sin^n(theta)] for an independent pair
/// (w, theta), covering a <= max_power and m + n <= max_trig_order.
class TrigMomentSet {
 public:
  TrigMomentSet() = default;
  TrigMomentSet(int max_power, int max_trig_order);

  int max_power() const { return max_power_; }
  int max_trig_order() const { return max_trig_order_; }

  /// Entry E[w^a cos^m sin^n]; throws TableGapError when uncovered.
  double at(int a, int m, int n) const;
  double& at(int a, int m, int n);

  /// FNV-1a hash over the raw entries; identifies tables for matrix reuse.
  std::uint64_t hash() const;

  bool operator==(const TrigMomentSet& other) const;

 private:
  int index(int a, int m, int n) const;
  int max_power_ = -1;
  int max_trig_order_ = -1;
  std::vector<double> values_;
};

/// Table for an independent control pair: entry (a, m, n) is
/// E[w_v^a] * E[cos^m(w_theta) sin^n(w_theta)].
TrigMomentSet control_trig_table(const ScalarDist& w_v,
                                 const ScalarDist& w_theta, int max_power,
                                 int max_trig_order);

/// Raw moments of the shifted vector (x - v1, y - v2) via the binomial
/// theorem; order is preserved.
MomentArray2 translate_moments(const MomentArray2& m,
                               const Eigen::Vector2d& v);

/// Conjugation Q* = R(theta)^T Q R(theta). Eigenvalues are preserved.
Ellipsoid rotate_ellipsoid(const Ellipsoid& e, double theta);

}  // namespace trajrisk
