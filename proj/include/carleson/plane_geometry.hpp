#pragma once

#include <complex>
#include <vector>

#include "carleson/radial_measure.hpp"

namespace carleson {

// A point of the open right half-plane; re > 0 is enforced.
struct HalfPlanePoint {
  double re;
  double im;
  HalfPlanePoint(double re_, double im_);
  std::complex<double> to_complex() const { return {re, im}; }
};

// Carleson square centred at a:
//   Q(a) = { x+iy : 0 < x <= 2 re(a), |y - im(a)| <= re(a) }.
struct CarlesonSquare {
  HalfPlanePoint centre;
  explicit CarlesonSquare(HalfPlanePoint a) : centre(a) {}
  double re_hi() const { return 2.0 * centre.re; }
  double im_lo() const { return centre.im - centre.re; }
  double im_hi() const { return centre.im + centre.re; }
};

bool square_contains(const CarlesonSquare& q, const HalfPlanePoint& z);

struct PlaneAtom {
  HalfPlanePoint z;
  double mass;  // > 0
};

// Finite atomic positive measure on the open half-plane.
class PlaneMeasure {
 public:
  PlaneMeasure() = default;
  explicit PlaneMeasure(std::vector<PlaneAtom> atoms);

  const std::vector<PlaneAtom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  double total_mass() const;
  PlaneMeasure scaled(double factor) const;
  // Sums masses of atoms at identical points.
  PlaneMeasure merged() const;

 private:
  std::vector<PlaneAtom> atoms_;
};

double square_mass(const PlaneMeasure& mu, const HalfPlanePoint& a);

double square_intersection_mass(const PlaneMeasure& mu, const HalfPlanePoint& a,
                                const HalfPlanePoint& z);

// nu_n(closure(Q(a))) for nu_n = nu~ (x) Lebesgue:
// nu~[0, 2 re(a)] (closed) times the height 2 re(a).
double product_square_mass(const RadialMeasure& nu, const HalfPlanePoint& a);

// Poincare hyperbolic distance on the right half-plane:
// acosh(1 + (|z1 - z2|^2) / (2 re(z1) re(z2))).
double hyperbolic_distance(const HalfPlanePoint& z1, const HalfPlanePoint& z2);

}  // namespace carleson
