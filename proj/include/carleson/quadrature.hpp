#pragma once

#include <cmath>
#include <complex>
#include <queue>
#include <vector>

#include "carleson/errors.hpp"

namespace carleson {

// Adaptive Gauss-Kronrod (G7-K15) integration on a finite interval.
// The integrand may return double or std::complex<double>; the error
// estimate is |K15 - G7| per panel, refined worst-panel-first.

namespace detail {

inline double abs_value(double x) { return std::fabs(x); }
inline double abs_value(const std::complex<double>& z) { return std::abs(z); }

// K15 abscissae (positive half) and weights, G7 weights on the shared nodes.
inline constexpr double kk15_x[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kk15_w[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kg7_w[4] = {0.129484966168870, 0.279705391489277,
                                    0.381830050505119, 0.417959183673469};

template <class F, class T>
void gk15_panel(F& f, double a, double b, T& value, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T fc = f(mid);
  T k15 = kk15_w[7] * fc;
  T g7 = kg7_w[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kk15_x[i];
    T s = f(mid - dx) + f(mid + dx);
    k15 += kk15_w[i] * s;
    if (i % 2 == 1) g7 += kg7_w[i / 2] * s;
  }
  value = half * k15;
  err = abs_value(half * (k15 - g7));
}

}  // namespace detail

template <class T>
struct QuadResult {
  T value{};
  double err = 0.0;       // accumulated error estimate
  long evals = 0;         // integrand evaluations used
  bool converged = false;
};

// Integrates f over [a, b] to absolute tolerance abs_tol.  Does not throw on
// failure; callers inspect .converged (the public operations wrap this with
// NonconvergentQuadrature and context).
template <class F>
auto integrate_adaptive(F&& f, double a, double b, double abs_tol,
                        long max_evals = 2000000)
    -> QuadResult<decltype(f(0.0))> {
  using T = decltype(f(0.0));
  struct Panel {
    double a, b, err;
    T value;
    bool operator<(const Panel& o) const { return err < o.err; }
  };
  QuadResult<T> res;
  if (a == b) {
    res.converged = true;
    return res;
  }

  std::priority_queue<Panel> panels;
  Panel p0{a, b, 0.0, T{}};
  detail::gk15_panel(f, a, b, p0.value, p0.err);
  res.evals += 15;
  panels.push(p0);
  double total_err = p0.err;
  T total = p0.value;

  while (total_err > abs_tol && res.evals + 30 <= max_evals) {
    Panel worst = panels.top();
    if (worst.b - worst.a <= std::fabs(worst.a) * 1e-15) break;  // width floor
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left{worst.a, mid, 0.0, T{}};
    Panel right{mid, worst.b, 0.0, T{}};
    detail::gk15_panel(f, left.a, left.b, left.value, left.err);
    detail::gk15_panel(f, right.a, right.b, right.value, right.err);
    res.evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    panels.push(left);
    panels.push(right);
  }

  // Re-sum panels in queue order for a cleaner total (the incremental update
  // above accumulates rounding).
  total = T{};
  total_err = 0.0;
  std::vector<Panel> all;
  all.reserve(panels.size());
  while (!panels.empty()) {
    all.push_back(panels.top());
    panels.pop();
  }
  for (const Panel& p : all) {
    total += p.value;
    total_err += p.err;
  }

  res.value = total;
  res.err = total_err;
  res.converged = total_err <= abs_tol;
  return res;
}

// Integrates f over [x0, infinity) by marching geometrically growing
// segments.  tail_bound(X) must return a certified upper bound on
// |integral of f over [X, inf)|; marching stops once it drops below
// abs_tol/2 (the remaining half of the budget pays for the segments).
template <class F, class TailFn>
auto integrate_to_infinity(F&& f, double x0, TailFn&& tail_bound,
                           double abs_tol, long max_evals = 4000000)
    -> QuadResult<decltype(f(0.0))> {
  using T = decltype(f(0.0));
  QuadResult<T> res;
  double lo = x0;
  double seg = std::fmax(1.0, std::fabs(x0));
  const double seg_tol = abs_tol / 8.0;
  while (res.evals < max_evals) {
    const double hi = lo + seg;
    auto part = integrate_adaptive(f, lo, hi, seg_tol, max_evals - res.evals);
    res.value += part.value;
    res.err += part.err;
    res.evals += part.evals;
    if (!part.converged) return res;  // converged stays false
    lo = hi;
    seg *= 2.0;
    const double tb = tail_bound(lo);
    if (tb <= abs_tol / 2.0) {
      res.err += tb;
      res.converged = res.err <= abs_tol;
      return res;
    }
  }
  return res;
}

}  // namespace carleson
