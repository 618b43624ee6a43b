#include "carleson/spaces.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "carleson/errors.hpp"
#include "carleson/quadrature.hpp"

namespace carleson {

namespace {

constexpr double kPi = std::numbers::pi;

// One lower- or upper-bound term C * t^p for the weight, valid for t >= t_min
// (lower bounds carry no exponential factor: only the sigma = 0 components
// are kept, which every doubling measure provides).
struct PowerTerm {
  double coeff;
  double exponent;
  double t_min;
};

// Lower-bound terms on w_(m): used to certify quadrature tails.
std::vector<PowerTerm> weight_lower_terms(const SpaceSpec& spec) {
  std::vector<PowerTerm> out;
  const auto& ms = spec.measures();
  for (int n = 0; n < static_cast<int>(ms.size()); ++n) {
    const double p2n = 2.0 * n;
    for (const auto& a : ms[n].atoms())
      if (a.r == 0.0) out.push_back({2.0 * kPi * a.mass, p2n, 0.0});
    for (const auto& p : ms[n].pieces()) {
      if (p.from != 0.0) continue;
      if (std::isinf(p.to)) {
        out.push_back({2.0 * kPi * p.c * std::tgamma(p.alpha + 1.0) *
                           std::pow(2.0, -p.alpha - 1.0),
                       p2n - p.alpha - 1.0, 0.0});
      } else {
        // restrict the integral to [0, 1/(2t)]: for t >= 1/(2 to),
        // w-contribution >= 2 pi c e^{-1} (2t)^{-alpha-1}/(alpha+1) * t^{2n}
        out.push_back({2.0 * kPi * p.c * std::exp(-1.0) *
                           std::pow(2.0, -p.alpha - 1.0) / (p.alpha + 1.0),
                       p2n - p.alpha - 1.0, 1.0 / (2.0 * p.to)});
      }
    }
  }
  return out;
}

// Upper-bound terms: w_(m)(t) <= sum of C_i t^{p_i} for all t > 0.
std::vector<PowerTerm> weight_upper_terms(const SpaceSpec& spec) {
  std::vector<PowerTerm> out;
  const auto& ms = spec.measures();
  for (int n = 0; n < static_cast<int>(ms.size()); ++n) {
    const double p2n = 2.0 * n;
    for (const auto& a : ms[n].atoms())
      out.push_back({2.0 * kPi * a.mass, p2n, 0.0});
    for (const auto& p : ms[n].pieces()) {
      if (std::isinf(p.to)) {
        out.push_back({2.0 * kPi * p.c * std::tgamma(p.alpha + 1.0) *
                           std::pow(2.0, -p.alpha - 1.0),
                       p2n - p.alpha - 1.0, 0.0});
      } else {
        const double e = p.alpha + 1.0;
        const double mass = p.c * (std::pow(p.to, e) - std::pow(p.from, e)) / e;
        out.push_back({2.0 * kPi * mass, p2n, 0.0});
      }
    }
  }
  return out;
}

// Certified bound on the tail integral of t^p e^{-t s} over [T, inf), s > 0.
// For p > 0 it requires T >= 2p/s (then t^p e^{-ts/2} is decreasing).
double power_exp_tail(double p, double s, double T) {
  if (p <= 0.0) return std::pow(T, p) * std::exp(-T * s) / s;
  if (T < 2.0 * p / s) return std::numeric_limits<double>::infinity();
  return std::pow(T, p) * std::exp(-T * s) * 2.0 / s;
}

// Bound on the kernel-integrand tail: integral over [T,inf) of e^{-ts}/w(t).
double kernel_tail_bound(const std::vector<PowerTerm>& lower, double s,
                         double T) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& term : lower) {
    if (T < term.t_min) continue;
    best = std::fmin(best, power_exp_tail(-term.exponent, s, T) / term.coeff);
  }
  return best;
}

}  // namespace

SpaceSpec::SpaceSpec(std::vector<RadialMeasure> measures, SpacePreset preset,
                     double bergman_alpha)
    : measures_(std::move(measures)),
      preset_(preset),
      bergman_alpha_(bergman_alpha) {
  if (measures_.empty())
    throw std::invalid_argument("SpaceSpec requires at least one measure");
  const std::vector<double> grid = default_delta2_grid();
  for (const auto& m : measures_)
    doubling_.push_back(delta2_ratio(m, grid).ratio_sup);  // throws ZeroMass
  for (double t : {1e-6, 1e-3, 1.0, 1e3, 1e6}) {
    const double w = weight_total(t);
    if (!(w > 0.0) || !std::isfinite(w))
      throw std::invalid_argument("weight w_(m) must be positive and finite");
  }
}

SpaceSpec SpaceSpec::hardy() {
  return SpaceSpec({RadialMeasure::dirac0_over_2pi()}, SpacePreset::Hardy);
}

SpaceSpec SpaceSpec::dirichlet() {
  return SpaceSpec(
      {RadialMeasure::dirac0_over_2pi(), RadialMeasure::lebesgue_over_pi()},
      SpacePreset::Dirichlet);
}

SpaceSpec SpaceSpec::bergman(double alpha) {
  return SpaceSpec({RadialMeasure::bergman_alpha(alpha)}, SpacePreset::Bergman,
                   alpha);
}

double SpaceSpec::weight_component(int n, double t) const {
  return weight_w_n(measures_.at(static_cast<std::size_t>(n)), n, t);
}

double SpaceSpec::weight_total(double t) const {
  double w = 0.0;
  for (int n = 0; n < static_cast<int>(measures_.size()); ++n)
    w += weight_component(n, t);
  return w;
}

double SpaceSpec::small_t_exponent() const {
  double p = std::numeric_limits<double>::infinity();
  for (int n = 0; n < static_cast<int>(measures_.size()); ++n) {
    const auto& m = measures_[n];
    for (const auto& a : m.atoms()) {
      (void)a;
      p = std::fmin(p, 2.0 * n);
    }
    for (const auto& pc : m.pieces())
      p = std::fmin(p, pc.from == 0.0 ? 2.0 * n - pc.alpha - 1.0 : 2.0 * n);
  }
  return p;
}

KernelValue kernel_quadrature(const SpaceSpec& spec, const HalfPlanePoint& z,
                              const HalfPlanePoint& zeta, double tol) {
  if (!(tol > 0.0)) throw std::invalid_argument("kernel tol must be > 0");
  const std::complex<double> s = std::conj(z.to_complex()) + zeta.to_complex();
  const double s_re = s.real();
  const auto lower = weight_lower_terms(spec);

  double T = 1.0 / s_re;
  for (const auto& term : lower) T = std::fmax(T, term.t_min);
  double tail = kernel_tail_bound(lower, s_re, T);
  while (tail > tol / 4.0) {
    T *= 2.0;
    if (T > 1e9 / s_re)
      throw NonconvergentQuadrature("kernel truncation bound not reached");
    tail = kernel_tail_bound(lower, s_re, T);
  }

  auto f = [&](double t) -> std::complex<double> {
    return std::exp(-t * s) / spec.weight_total(t);
  };
  auto q = integrate_adaptive(f, 0.0, T, tol / 2.0);
  if (!q.converged)
    throw NonconvergentQuadrature("kernel quadrature exhausted its budget");
  return {q.value, q.err + tail};
}

std::complex<double> kernel_closed_form_bergman(double alpha,
                                                const HalfPlanePoint& z,
                                                const HalfPlanePoint& zeta) {
  if (alpha < -1.0)
    throw std::domain_error("Bergman kernel requires alpha >= -1");
  const std::complex<double> s = std::conj(z.to_complex()) + zeta.to_complex();
  if (alpha == -1.0) return 1.0 / s;
  return std::pow(2.0, alpha) * (1.0 + alpha) * std::pow(s, -2.0 - alpha);
}

std::complex<double> kernel_dirichlet_alpha(const HalfPlanePoint& alpha,
                                            const HalfPlanePoint& z,
                                            const HalfPlanePoint& zeta) {
  const std::complex<double> a = alpha.to_complex();
  const std::complex<double> num =
      (std::conj(a) + zeta.to_complex()) * (a + std::conj(z.to_complex()));
  const std::complex<double> den =
      2.0 * kPi * alpha.re *
      (std::conj(z.to_complex()) + zeta.to_complex());
  return std::log(num / den) + 1.0;
}

TimeFunction::TimeFunction(std::function<std::complex<double>(double)> fn,
                           double amplitude, double decay, double power)
    : fn_(std::move(fn)), amplitude_(amplitude), decay_(decay), power_(power) {
  if (!(amplitude_ >= 0.0) || !(decay_ > 0.0) || !(power_ > -0.5))
    throw std::invalid_argument(
        "TimeFunction envelope requires amplitude >= 0, decay > 0, power > -1/2");
}

TimeFunction TimeFunction::monomial_exp(std::complex<double> coeff,
                                        double power, double decay) {
  return TimeFunction(
      [coeff, power, decay](double t) {
        return coeff * std::pow(t, power) * std::exp(-decay * t);
      },
      std::abs(coeff), decay, power);
}

TimeFunction TimeFunction::exp_decay(std::complex<double> wbar) {
  if (!(wbar.real() > 0.0))
    throw std::invalid_argument("exp_decay requires Re(wbar) > 0");
  return TimeFunction(
      [wbar](double t) { return std::exp(-t * wbar); }, 1.0, wbar.real(), 0.0);
}

double TimeFunction::envelope_excess(double t_lo, double t_hi,
                                     int samples) const {
  double worst = 0.0;
  for (int i = 0; i < samples; ++i) {
    const double t =
        t_lo * std::pow(t_hi / t_lo, static_cast<double>(i) / (samples - 1));
    const double env = amplitude_ * std::pow(t, power_) * std::exp(-decay_ * t);
    if (env > 0.0) worst = std::fmax(worst, std::abs(fn_(t)) / env);
  }
  return worst;
}

std::complex<double> laplace_transform(const TimeFunction& f,
                                       const HalfPlanePoint& z, double tol) {
  const double sigma = f.decay() + z.re;
  if (!(sigma > 0.0))
    throw std::invalid_argument("laplace_transform requires re(z) + decay > 0");
  double T = std::fmax(1.0 / sigma, 4.0 * f.power() / sigma);
  double tail = f.amplitude() * power_exp_tail(f.power(), sigma, T);
  while (tail > tol / 4.0) {
    T *= 2.0;
    tail = f.amplitude() * power_exp_tail(f.power(), sigma, T);
    if (T > 1e12) throw NonconvergentQuadrature("laplace truncation failed");
  }
  const std::complex<double> zc = z.to_complex();
  auto g = [&](double t) { return f(t) * std::exp(-t * zc); };
  auto q = integrate_adaptive(g, 0.0, T, tol / 2.0);
  if (!q.converged)
    throw NonconvergentQuadrature("laplace quadrature exhausted its budget");
  return q.value;
}

double time_side_norm(const SpaceSpec& spec, const TimeFunction& f,
                      double tol) {
  // Convergence near t = 0 under the declared envelope.
  if (2.0 * f.power() + spec.small_t_exponent() <= -1.0)
    throw std::invalid_argument(
        "time-side norm diverges at t=0 for the declared envelope");

  const auto upper = weight_upper_terms(spec);
  const double A2 = f.amplitude() * f.amplitude();
  const double delta = f.decay();
  double T = 1.0 / delta;
  auto tail_at = [&](double X) {
    double tb = 0.0;
    for (const auto& term : upper)
      tb += A2 * term.coeff *
            power_exp_tail(2.0 * f.power() + term.exponent, 2.0 * delta, X);
    return tb;
  };
  while (tail_at(T) > tol / 4.0) {
    T *= 2.0;
    if (T > 1e12)
      throw NonconvergentQuadrature("norm truncation bound not reached");
  }
  auto g = [&](double t) {
    const double mod = std::abs(f(t));
    return mod * mod * spec.weight_total(t);
  };
  auto q = integrate_adaptive(g, 0.0, T, tol / 2.0);
  if (!q.converged)
    throw NonconvergentQuadrature("norm quadrature exhausted its budget");
  return q.value;
}

double reproducing_property_check(const SpaceSpec& spec, const TimeFunction& f,
                                  const HalfPlanePoint& z, double tol) {
  const std::complex<double> lhs = laplace_transform(f, z, tol / 2.0);

  // Inner product <f, khat_z>_{L^2_w} along a different numerical route:
  // the integrand evaluates khat and w separately, and the integral marches
  // geometric segments instead of one truncated panel set.
  const std::complex<double> zbar = std::conj(z.to_complex());
  auto integrand = [&](double t) -> std::complex<double> {
    const double w = spec.weight_total(t);
    const std::complex<double> khat = std::exp(-t * zbar) / w;
    return f(t) * std::conj(khat) * w;
  };
  const double sigma = f.decay() + z.re;
  auto tail_bound = [&](double X) {
    return f.amplitude() * power_exp_tail(f.power(), sigma, X);
  };
  auto q = integrate_to_infinity(integrand, 0.0, tail_bound, tol / 2.0);
  if (!q.converged)
    throw NonconvergentQuadrature("inner-product quadrature failed");
  return std::abs(lhs - q.value);
}

double min_bergman_exponent(const SpaceSpec& spec, double margin) {
  if (!(margin > 0.0)) throw std::invalid_argument("margin must be > 0");
  double r_max = 1.0;
  for (double r : spec.doubling_constants()) r_max = std::fmax(r_max, r);
  const double q = std::log2(r_max) + margin;
  return std::fmax(-1.0, (q - 3.0) / 2.0);
}

}  // namespace carleson
