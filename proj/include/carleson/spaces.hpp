#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "carleson/plane_geometry.hpp"
#include "carleson/radial_measure.hpp"

namespace carleson {

enum class SpacePreset { Custom, Hardy, Dirichlet, Bergman };

// The space A^2_(m) determined by radial measures (nu_0, ..., nu_m), all
// satisfying the doubling condition.  Carries the weight
//   w_(m)(t) = sum_n 2 pi t^{2n} integral e^{-2rt} d nu_n(r)
// and the doubling constants R_n cached at construction.
class SpaceSpec {
 public:
  explicit SpaceSpec(std::vector<RadialMeasure> measures,
                     SpacePreset preset = SpacePreset::Custom,
                     double bergman_alpha = 0.0);

  static SpaceSpec hardy();
  static SpaceSpec dirichlet();
  static SpaceSpec bergman(double alpha);

  const std::vector<RadialMeasure>& measures() const { return measures_; }
  int m() const { return static_cast<int>(measures_.size()) - 1; }
  const std::vector<double>& doubling_constants() const { return doubling_; }
  SpacePreset preset() const { return preset_; }
  double bergman_alpha() const { return bergman_alpha_; }

  // w_(m)(t) and the single component w_n(t).
  double weight_total(double t) const;
  double weight_component(int n, double t) const;

  // Exponent of w_(m) as t -> 0+ (most negative component exponent); used
  // for convergence checks near the time origin.
  double small_t_exponent() const;

 private:
  std::vector<RadialMeasure> measures_;
  std::vector<double> doubling_;
  SpacePreset preset_;
  double bergman_alpha_;
};

struct KernelValue {
  std::complex<double> value;
  double abs_error_estimate = 0.0;
};

// Reproducing kernel of A^2_(m),
//   k_z(zeta) = integral over (0,inf) of e^{-t(conj(z)+zeta)} / w_(m)(t) dt,
// by adaptive quadrature with a certified truncation bound.
KernelValue kernel_quadrature(const SpaceSpec& spec, const HalfPlanePoint& z,
                              const HalfPlanePoint& zeta, double tol = 1e-10);

// Bergman kernels for the half-plane: 1/(conj(z)+zeta) for alpha = -1 (Hardy)
// and 2^alpha (1+alpha) (conj(z)+zeta)^{-2-alpha} for alpha > -1.
std::complex<double> kernel_closed_form_bergman(double alpha,
                                                const HalfPlanePoint& z,
                                                const HalfPlanePoint& zeta);

// Kernel of the Dirichlet-type space normalized at the base point alpha:
//   ln( (conj(alpha)+zeta)(alpha+conj(z)) / (2 pi re(alpha) (conj(z)+zeta)) ) + 1,
// principal branch.  Implements the displayed formula verbatim; note that
// evaluating at z = zeta = alpha yields 1 - ln(pi), not 1 (the formula's
// normalization constant), which the tests document rather than adjust.
std::complex<double> kernel_dirichlet_alpha(const HalfPlanePoint& alpha,
                                            const HalfPlanePoint& z,
                                            const HalfPlanePoint& zeta);

// A function on (0, inf) with a declared decay envelope
//   |f(t)| <= amplitude * t^power * e^{-decay * t},  decay > 0, power > -1/2.
class TimeFunction {
 public:
  TimeFunction(std::function<std::complex<double>(double)> fn, double amplitude,
               double decay, double power);

  // coeff * t^power * e^{-decay t}
  static TimeFunction monomial_exp(std::complex<double> coeff, double power,
                                   double decay);
  // e^{-t wbar} for a half-plane point w (Laplace preimage of the Hardy
  // kernel k_w).
  static TimeFunction exp_decay(std::complex<double> wbar);

  std::complex<double> operator()(double t) const { return fn_(t); }
  double amplitude() const { return amplitude_; }
  double decay() const { return decay_; }
  double power() const { return power_; }

  // Max of |f(t)| / envelope(t) over a log grid in [t_lo, t_hi]; the declared
  // envelope holds when this is <= 1 (up to rounding).
  double envelope_excess(double t_lo, double t_hi, int samples = 200) const;

 private:
  std::function<std::complex<double>(double)> fn_;
  double amplitude_, decay_, power_;
};

// integral over (0,inf) of f(t) e^{-tz} dt to absolute tolerance tol.
std::complex<double> laplace_transform(const TimeFunction& f,
                                       const HalfPlanePoint& z,
                                       double tol = 1e-10);

// Squared norm integral |f(t)|^2 w_(m)(t) dt.
double time_side_norm(const SpaceSpec& spec, const TimeFunction& f,
                      double tol = 1e-10);

// | L[f](z) - <f, khat_z>_{L^2_w} | where khat_z(t) = e^{-t conj(z)}/w(t) is
// the time-side kernel representative; the two sides follow different
// numerical routes.
double reproducing_property_check(const SpaceSpec& spec, const TimeFunction& f,
                                  const HalfPlanePoint& z, double tol = 1e-8);

// Smallest alpha0 >= -1 with K_alpha(z, .) in A^2_(m) for all alpha >= alpha0,
// via the doubling constants: alpha0 = max(-1, (q-3)/2) with
// q = log2(max_n R_n) + margin.
double min_bergman_exponent(const SpaceSpec& spec, double margin = 1.0);

}  // namespace carleson
