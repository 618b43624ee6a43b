#include "carleson/radial_measure.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "carleson/errors.hpp"
#include "carleson/quadrature.hpp"

namespace carleson {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// integral of r^alpha over [a, b], alpha > -1, 0 <= a <= b finite.
double power_mass(double alpha, double a, double b) {
  if (b <= a) return 0.0;
  const double e = alpha + 1.0;
  return (std::pow(b, e) - std::pow(a, e)) / e;
}

// integral of e^{-2rt} r^alpha dr over [a, b] (b may be +inf), t > 0.
// [0, inf) is the Gamma integral; other supports use adaptive quadrature.
double exp_power_integral(double c, double alpha, double a, double b,
                          double t) {
  const double gamma_form =
      std::tgamma(alpha + 1.0) / std::pow(2.0 * t, alpha + 1.0);
  if (a == 0.0 && std::isinf(b)) return c * gamma_form;

  // Truncation point for an infinite upper limit: once R >= alpha/t the
  // integrand is dominated by R^alpha e^{-Rt} e^{-rt}, so the tail beyond R
  // is at most R^alpha e^{-2Rt}/t; double R until that clears the tolerance.
  const double rel_tol = 1e-12;
  const double scale = c * gamma_form;  // magnitude reference
  double hi = b;
  double tail = 0.0;
  if (std::isinf(b)) {
    double r_tail = std::fmax(a + 1.0, std::fmax(1.0 / t, alpha / t));
    while (true) {
      tail = c * std::pow(r_tail, alpha) * std::exp(-2.0 * r_tail * t) / t;
      if (tail < rel_tol * scale || r_tail > 1e12) break;
      r_tail *= 2.0;
    }
    hi = r_tail;
  }

  auto integrand = [&](double r) { return std::exp(-2.0 * r * t) * std::pow(r, alpha); };
  QuadResult<double> q;
  if (a == 0.0 && alpha < 0.0) {
    // substitute u = r^{1+alpha}/(1+alpha) to remove the endpoint singularity
    const double e = 1.0 + alpha;
    const double u_hi = std::pow(hi, e) / e;
    auto g = [&](double u) {
      const double r = std::pow(e * u, 1.0 / e);
      return std::exp(-2.0 * r * t);
    };
    q = integrate_adaptive(g, 0.0, u_hi, rel_tol * std::fmax(scale, 1e-300));
  } else {
    q = integrate_adaptive(integrand, a, hi, rel_tol * std::fmax(scale, 1e-300));
  }
  if (!q.converged)
    throw NonconvergentQuadrature(
        "weight piece integral did not reach tolerance (alpha=" +
        std::to_string(alpha) + ", t=" + std::to_string(t) + ")");
  // The discarded tail is below rel_tol * scale by construction.
  (void)tail;
  return c * q.value;
}

}  // namespace

RadialMeasure::RadialMeasure(std::vector<RadialAtom> atoms,
                             std::vector<DensityPiece> pieces)
    : atoms_(std::move(atoms)), pieces_(std::move(pieces)) {
  for (const auto& a : atoms_) {
    if (!(a.r >= 0.0)) throw std::invalid_argument("atom location must be >= 0");
    if (!(a.mass > 0.0)) throw std::invalid_argument("atom mass must be > 0");
  }
  for (const auto& p : pieces_) {
    if (!(p.c > 0.0)) throw std::invalid_argument("piece coefficient must be > 0");
    if (!(p.alpha > -1.0)) throw std::invalid_argument("piece exponent must be > -1");
    if (!(p.from >= 0.0) || !(p.to > p.from))
      throw std::invalid_argument("piece support must satisfy 0 <= from < to");
  }
  std::vector<DensityPiece> sorted = pieces_;
  std::sort(sorted.begin(), sorted.end(),
            [](const DensityPiece& x, const DensityPiece& y) { return x.from < y.from; });
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (sorted[i].from < sorted[i - 1].to)
      throw std::invalid_argument("density supports must be pairwise disjoint");
}

RadialMeasure RadialMeasure::dirac0_over_2pi() {
  return RadialMeasure({{0.0, 1.0 / (2.0 * kPi)}}, {});
}

RadialMeasure RadialMeasure::lebesgue_over_pi() {
  return RadialMeasure({}, {{1.0 / kPi, 0.0, 0.0, kInf}});
}

RadialMeasure RadialMeasure::bergman_alpha(double alpha) {
  if (!(alpha > -1.0))
    throw std::invalid_argument("bergman_alpha requires alpha > -1");
  return RadialMeasure({}, {{1.0 / kPi, alpha, 0.0, kInf}});
}

double RadialMeasure::mass_interval(double r, bool closed) const {
  if (!(r > 0.0)) throw std::invalid_argument("mass_interval requires r > 0");
  double total = 0.0;
  for (const auto& a : atoms_)
    if (a.r < r || (closed && a.r == r)) total += a.mass;
  for (const auto& p : pieces_) {
    const double hi = std::fmin(p.to, r);
    if (hi > p.from) total += p.c * power_mass(p.alpha, p.from, hi);
  }
  return total;
}

std::vector<double> default_delta2_grid() {
  std::vector<double> g(64);
  for (int i = 0; i < 64; ++i)
    g[i] = std::pow(10.0, -6.0 + 12.0 * i / 63.0);
  return g;
}

Delta2Report delta2_ratio(const RadialMeasure& m,
                          const std::vector<double>& r_grid) {
  if (r_grid.empty())
    throw std::invalid_argument("delta2_ratio requires a nonempty grid");
  Delta2Report rep;
  rep.grid = r_grid;
  double best = 0.0, witness = r_grid.front();
  for (double r : r_grid) {
    if (!(r > 0.0)) throw std::invalid_argument("delta2 grid entries must be > 0");
    const double lo = m.mass_interval(r);
    if (lo == 0.0)
      throw ZeroMass("nu[0,r) = 0 at r = " + std::to_string(r) +
                     "; doubling ratio undefined");
    const double ratio = m.mass_interval(2.0 * r) / lo;
    if (ratio > best) {
      best = ratio;
      witness = r;
    }
  }
  rep.ratio_sup = best;
  rep.witness_r = witness;

  // Closed-form families: sup is attained exactly.
  const bool atoms_at_zero =
      !m.atoms().empty() &&
      std::all_of(m.atoms().begin(), m.atoms().end(),
                  [](const RadialAtom& a) { return a.r == 0.0; });
  if (atoms_at_zero && m.pieces().empty()) {
    rep.ratio_sup = 1.0;
    rep.closed_form = true;
  } else if (m.atoms().empty() && m.pieces().size() == 1 &&
             m.pieces()[0].from == 0.0 && std::isinf(m.pieces()[0].to)) {
    rep.ratio_sup = std::pow(2.0, m.pieces()[0].alpha + 1.0);
    rep.closed_form = true;
  }
  return rep;
}

double weight_w_n(const RadialMeasure& m, int n, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("weight_w_n requires t > 0");
  if (n < 0) throw std::invalid_argument("weight_w_n requires n >= 0");
  double integral = 0.0;
  for (const auto& a : m.atoms())
    integral += a.mass * std::exp(-2.0 * a.r * t);
  for (const auto& p : m.pieces())
    integral += exp_power_integral(p.c, p.alpha, p.from, p.to, t);
  return 2.0 * kPi * std::pow(t, 2.0 * n) * integral;
}

}  // namespace carleson
