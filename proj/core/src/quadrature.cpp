#include "trajrisk/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <queue>
#include <vector>

namespace trajrisk {
namespace {

// 15-point Kronrod nodes on [-1, 1] (positive half) and weights, with the
// embedded 7-point Gauss rule on the odd-indexed nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelResult {
  double integral;
  double error;
};

PanelResult gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  double fc = f(c);
  double result_gauss = fc * kWg[3];
  double result_kronrod = fc * kWgk[7];

  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double f1 = f(c - dx);
    const double f2 = f(c + dx);
    result_kronrod += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) result_gauss += kWg[j / 2] * (f1 + f2);
  }
  result_gauss *= h;
  result_kronrod *= h;
  return {result_kronrod, std::abs(result_kronrod - result_gauss)};
}

struct Interval {
  double a, b, integral, error;
  bool operator<(const Interval& o) const { return error < o.error; }
};

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    long max_evaluations) {
  QuadratureResult out;
  if (a == b) {
    out.converged = true;
    return out;
  }

  std::priority_queue<Interval> heap;
  PanelResult first = gk15(f, a, b);
  out.evaluations = 15;
  heap.push({a, b, first.integral, first.error});
  double total = first.integral;
  double total_err = first.error;

  while (total_err > abs_tol && out.evaluations + 30 <= max_evaluations) {
    Interval worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid == worst.a || mid == worst.b) {
      // Interval at floating point resolution; accept its estimate.
      total_err -= worst.error;
      continue;
    }
    PanelResult left = gk15(f, worst.a, mid);
    PanelResult right = gk15(f, mid, worst.b);
    out.evaluations += 30;
    total += left.integral + right.integral - worst.integral;
    total_err += left.error + right.error - worst.error;
    heap.push({worst.a, mid, left.integral, left.error});
    heap.push({mid, worst.b, right.integral, right.error});
  }

  out.value = total;
  out.error_estimate = std::max(total_err, 0.0);
  out.converged = total_err <= abs_tol;
  return out;
}

}  // namespace trajrisk
