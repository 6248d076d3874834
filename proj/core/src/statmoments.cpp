#include "trajrisk/statmoments.hpp"

#include <cmath>
#include <cstring>

#include "trajrisk/errors.hpp"

namespace trajrisk {

namespace {

void check_order(int order) {
  if (order < 0) throw OrderError("moment order must be nonnegative");
  if (order > kMaxMomentOrder) {
    throw OrderError("moment order " + std::to_string(order) +
                     " exceeds cap " + std::to_string(kMaxMomentOrder));
  }
}

double binomial(int n, int k) {
  // n <= 32 in practice; exact in double.
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ScalarDist ScalarDist::gaussian(double mean, double variance) {
  if (!std::isfinite(mean) || !std::isfinite(variance)) {
    throw NumericError("gaussian parameters must be finite");
  }
  if (variance < 0.0) {
    throw ValidationError("gaussian variance must be nonnegative");
  }
  return ScalarDist({{1.0, mean, variance}});
}

ScalarDist ScalarDist::mixture(const std::vector<Component>& components) {
  if (components.empty()) {
    throw ValidationError("mixture needs at least one component");
  }
  double sum = 0.0;
  for (const auto& c : components) {
    if (!std::isfinite(c.weight) || !std::isfinite(c.mean) ||
        !std::isfinite(c.variance)) {
      throw NumericError("mixture parameters must be finite");
    }
    if (c.weight < 0.0) throw ValidationError("mixture weight negative");
    if (c.variance < 0.0) throw ValidationError("mixture variance negative");
    sum += c.weight;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    throw ValidationError("mixture weights sum to " + std::to_string(sum));
  }
  return ScalarDist(components);
}

double ScalarDist::mean() const {
  double m = 0.0;
  for (const auto& c : components_) m += c.weight * c.mean;
  return m;
}

double ScalarDist::variance() const {
  const double m = mean();
  double second = 0.0;
  for (const auto& c : components_) {
    second += c.weight * (c.variance + c.mean * c.mean);
  }
  return second - m * m;
}

CharacteristicFunctionValue char_eval(const ScalarDist& d, double t) {
  if (!std::isfinite(t)) throw NumericError("char_eval argument not finite");
  CharacteristicFunctionValue v(0.0, 0.0);
  for (const auto& c : d.components()) {
    const double amp = std::exp(-0.5 * c.variance * t * t);
    v += c.weight * amp *
         CharacteristicFunctionValue(std::cos(c.mean * t),
                                     std::sin(c.mean * t));
  }
  return v;
}

std::vector<double> raw_moments_1d(const ScalarDist& d, int order) {
  check_order(order);
  std::vector<double> out(order + 1, 0.0);
  for (const auto& c : d.components()) {
    double prev2 = 0.0;
    double prev1 = 1.0;  // m_0
    out[0] += c.weight;
    for (int j = 1; j <= order; ++j) {
      const double mj = c.mean * prev1 + (j - 1) * c.variance * prev2;
      out[j] += c.weight * mj;
      prev2 = prev1;
      prev1 = mj;
    }
  }
  return out;
}

MomentArray2::MomentArray2(int order) : order_(order) {
  check_order(order);
  values_.assign((order + 1) * (order + 2) / 2, 0.0);
}

namespace {
// Triangle layout: entries with a + b = s start at s(s+1)/2, offset by b.
inline int tri_index(int a, int b) {
  const int s = a + b;
  return s * (s + 1) / 2 + b;
}
}  // namespace

double& MomentArray2::at(int a, int b) {
  if (a < 0 || b < 0 || a + b > order_) {
    throw OrderError("moment (a,b) outside array of order " +
                     std::to_string(order_));
  }
  return values_[tri_index(a, b)];
}

double MomentArray2::at(int a, int b) const {
  return const_cast<MomentArray2*>(this)->at(a, b);
}

Eigen::Vector2d MomentArray2::mean() const {
  return {at(1, 0), at(0, 1)};
}

Eigen::Matrix2d MomentArray2::covariance() const {
  const Eigen::Vector2d mu = mean();
  Eigen::Matrix2d c;
  c(0, 0) = at(2, 0) - mu.x() * mu.x();
  c(0, 1) = c(1, 0) = at(1, 1) - mu.x() * mu.y();
  c(1, 1) = at(0, 2) - mu.y() * mu.y();
  return c;
}

MomentArray2 mvg_raw_moments(const Eigen::Vector2d& mean,
                             const Eigen::Matrix2d& cov, int order) {
  check_order(order);
  // m_{a,b} = mu_x m_{a-1,b} + (a-1) Sxx m_{a-2,b} + b Sxy m_{a-1,b-1},
  // obtained by differentiating the moment generating function; the
  // symmetric rule applies in b when a = 0.
  MomentArray2 m(order);
  m.at(0, 0) = 1.0;
  for (int s = 1; s <= order; ++s) {
    for (int b = 0; b <= s; ++b) {
      const int a = s - b;
      double v = 0.0;
      if (a >= 1) {
        v = mean.x() * m.at(a - 1, b);
        if (a >= 2) v += (a - 1) * cov(0, 0) * m.at(a - 2, b);
        if (b >= 1) v += b * cov(0, 1) * m.at(a - 1, b - 1);
      } else {
        v = mean.y() * m.at(0, b - 1);
        if (b >= 2) v += (b - 1) * cov(1, 1) * m.at(0, b - 2);
      }
      m.at(a, b) = v;
    }
  }
  return m;
}

MomentArray2 mixture_moments_2d(const Mixture2& m, int order) {
  check_order(order);
  MomentArray2 out(order);
  for (const auto& wc : m.components) {
    const MomentArray2 part =
        mvg_raw_moments(wc.component.mean, wc.component.cov, order);
    for (int s = 0; s <= order; ++s) {
      for (int b = 0; b <= s; ++b) {
        out.at(s - b, b) += wc.weight * part.at(s - b, b);
      }
    }
  }
  return out;
}

double trig_moment(const ScalarDist& d, int m, int n) {
  if (m < 0 || n < 0) throw OrderError("trig moment orders must be >= 0");
  check_order(m + n);
  // cos^m sin^n expanded through Euler's identity: a double binomial sum
  // of characteristic function values at the integers 2(k1+k2) - m - n,
  // scaled by (-i)^n / 2^(m+n).
  std::complex<double> sum(0.0, 0.0);
  for (int k1 = 0; k1 <= m; ++k1) {
    const double bm = binomial(m, k1);
    for (int k2 = 0; k2 <= n; ++k2) {
      const double sign = ((n - k2) % 2 == 0) ? 1.0 : -1.0;
      const double coef = bm * binomial(n, k2) * sign;
      sum += coef * char_eval(d, static_cast<double>(2 * (k1 + k2) - m - n));
    }
  }
  static const std::complex<double> kMinusIPow[4] = {
      {1.0, 0.0}, {0.0, -1.0}, {-1.0, 0.0}, {0.0, 1.0}};
  sum *= kMinusIPow[n % 4] / std::pow(2.0, m + n);
  if (std::abs(sum.imag()) > 1e-10) {
    throw NumericError("trig moment assembly left imaginary residual " +
                       std::to_string(sum.imag()));
  }
  return sum.real();
}

TrigMomentSet::TrigMomentSet(int max_power, int max_trig_order)
    : max_power_(max_power), max_trig_order_(max_trig_order) {
  check_order(max_power);
  check_order(max_trig_order);
  const int tri = (max_trig_order + 1) * (max_trig_order + 2) / 2;
  values_.assign((max_power + 1) * tri, 0.0);
}

int TrigMomentSet::index(int a, int m, int n) const {
  if (a < 0 || m < 0 || n < 0 || a > max_power_ ||
      m + n > max_trig_order_) {
    throw TableGapError("trig table entry (" + std::to_string(a) + "," +
                        std::to_string(m) + "," + std::to_string(n) +
                        ") outside table");
  }
  const int tri = (max_trig_order_ + 1) * (max_trig_order_ + 2) / 2;
  return a * tri + tri_index(m, n);
}

double TrigMomentSet::at(int a, int m, int n) const {
  return values_[index(a, m, n)];
}

double& TrigMomentSet::at(int a, int m, int n) {
  return values_[index(a, m, n)];
}

std::uint64_t TrigMomentSet::hash() const {
  std::uint64_t h = 14695981039346656037ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int i = 0; i < 8; ++i) {
      h ^= (v >> (8 * i)) & 0xFF;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(max_power_));
  mix(static_cast<std::uint64_t>(max_trig_order_));
  for (double v : values_) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    mix(bits);
  }
  return h;
}

bool TrigMomentSet::operator==(const TrigMomentSet& other) const {
  return max_power_ == other.max_power_ &&
         max_trig_order_ == other.max_trig_order_ &&
         values_ == other.values_;
}

TrigMomentSet control_trig_table(const ScalarDist& w_v,
                                 const ScalarDist& w_theta, int max_power,
                                 int max_trig_order) {
  TrigMomentSet table(max_power, max_trig_order);
  const std::vector<double> powers = raw_moments_1d(w_v, max_power);
  for (int s = 0; s <= max_trig_order; ++s) {
    for (int n = 0; n <= s; ++n) {
      const double trig = trig_moment(w_theta, s - n, n);
      for (int a = 0; a <= max_power; ++a) {
        table.at(a, s - n, n) = powers[a] * trig;
      }
    }
  }
  return table;
}

MomentArray2 translate_moments(const MomentArray2& m,
                               const Eigen::Vector2d& v) {
  const int order = m.order();
  MomentArray2 out(order);
  // E[(x - v1)^a (y - v2)^b] expanded with the binomial theorem.
  std::vector<double> pow1(order + 1, 1.0), pow2(order + 1, 1.0);
  for (int i = 1; i <= order; ++i) {
    pow1[i] = pow1[i - 1] * (-v.x());
    pow2[i] = pow2[i - 1] * (-v.y());
  }
  for (int s = 0; s <= order; ++s) {
    for (int b = 0; b <= s; ++b) {
      const int a = s - b;
      double acc = 0.0;
      for (int i = 0; i <= a; ++i) {
        const double ca = binomial(a, i) * pow1[a - i];
        for (int j = 0; j <= b; ++j) {
          acc += ca * binomial(b, j) * pow2[b - j] * m.at(i, j);
        }
      }
      out.at(a, b) = acc;
    }
  }
  return out;
}

Ellipsoid rotate_ellipsoid(const Ellipsoid& e, double theta) {
  Eigen::Matrix2d r;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  r << c, -s, s, c;
  Ellipsoid out;
  out.q = r.transpose() * e.q * r;
  // Enforce exact symmetry against rounding.
  out.q = 0.5 * (out.q + out.q.transpose()).eval();
  return out;
}

Ellipsoid make_ellipsoid(const Eigen::Matrix2d& q) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!std::isfinite(q(i, j))) {
        throw NumericError("ellipsoid matrix entry not finite");
      }
    }
  }
  const double scale = q.cwiseAbs().maxCoeff();
  if (std::abs(q(0, 1) - q(1, 0)) > 1e-12 * std::max(scale, 1.0)) {
    throw ValidationError("ellipsoid matrix not symmetric");
  }
  Ellipsoid e;
  e.q = 0.5 * (q + q.transpose());
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(e.q);
  if (es.eigenvalues().minCoeff() <= 0.0) {
    throw ValidationError("ellipsoid matrix must be positive definite "
                          "(min eigenvalue " +
                          std::to_string(es.eigenvalues().minCoeff()) + ")");
  }
  return e;
}

Eigen::Matrix2d validate_covariance(const Eigen::Matrix2d& cov) {
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      if (!std::isfinite(cov(i, j))) {
        throw NumericError("covariance entry not finite");
      }
    }
  }
  const double scale = cov.cwiseAbs().maxCoeff();
  if (std::abs(cov(0, 1) - cov(1, 0)) > 1e-12 * std::max(scale, 1.0)) {
    throw ValidationError("covariance not symmetric");
  }
  Eigen::Matrix2d sym = 0.5 * (cov + cov.transpose());
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(sym);
  const double lo = es.eigenvalues()(0);
  if (lo < -kEigenvalueTol * std::max(scale, 1.0)) {
    throw ValidationError("covariance has negative eigenvalue " +
                          std::to_string(lo));
  }
  if (lo < 0.0) {
    // Clamp round-off negatives to the PSD cone.
    Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0);
    sym = es.eigenvectors() * ev.asDiagonal() *
          es.eigenvectors().transpose();
    sym = 0.5 * (sym + sym.transpose()).eval();
  }
  return sym;
}

void validate_mixture(Mixture2& m) {
  if (m.components.empty()) {
    throw ValidationError("mixture needs at least one component");
  }
  double sum = 0.0;
  for (auto& wc : m.components) {
    if (!std::isfinite(wc.weight)) throw NumericError("weight not finite");
    if (wc.weight < 0.0) throw ValidationError("mixture weight negative");
    if (!wc.component.mean.allFinite()) {
      throw NumericError("component mean not finite");
    }
    wc.component.cov = validate_covariance(wc.component.cov);
    sum += wc.weight;
  }
  if (std::abs(sum - 1.0) > kWeightSumTol) {
    throw ValidationError("mixture weights sum to " + std::to_string(sum) +
                          ", expected 1");
  }
}

}  // namespace trajrisk
