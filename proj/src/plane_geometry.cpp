#include "carleson/plane_geometry.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

namespace carleson {

HalfPlanePoint::HalfPlanePoint(double re_, double im_) : re(re_), im(im_) {
  if (!(re > 0.0))
    throw std::invalid_argument("HalfPlanePoint requires re > 0");
}

bool square_contains(const CarlesonSquare& q, const HalfPlanePoint& z) {
  return z.re <= q.re_hi() && std::fabs(z.im - q.centre.im) <= q.centre.re;
}

PlaneMeasure::PlaneMeasure(std::vector<PlaneAtom> atoms)
    : atoms_(std::move(atoms)) {
  for (const auto& a : atoms_)
    if (!(a.mass > 0.0)) throw std::invalid_argument("atom mass must be > 0");
}

double PlaneMeasure::total_mass() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += a.mass;
  return s;
}

PlaneMeasure PlaneMeasure::scaled(double factor) const {
  if (!(factor > 0.0)) throw std::invalid_argument("scale factor must be > 0");
  std::vector<PlaneAtom> out = atoms_;
  for (auto& a : out) a.mass *= factor;
  return PlaneMeasure(std::move(out));
}

PlaneMeasure PlaneMeasure::merged() const {
  std::map<std::pair<double, double>, double> acc;
  for (const auto& a : atoms_) acc[{a.z.re, a.z.im}] += a.mass;
  std::vector<PlaneAtom> out;
  out.reserve(acc.size());
  for (const auto& [pt, mass] : acc)
    out.push_back({HalfPlanePoint(pt.first, pt.second), mass});
  return PlaneMeasure(std::move(out));
}

double square_mass(const PlaneMeasure& mu, const HalfPlanePoint& a) {
  const CarlesonSquare q(a);
  double s = 0.0;
  for (const auto& atom : mu.atoms())
    if (square_contains(q, atom.z)) s += atom.mass;
  return s;
}

double square_intersection_mass(const PlaneMeasure& mu, const HalfPlanePoint& a,
                                const HalfPlanePoint& z) {
  const CarlesonSquare qa(a), qz(z);
  double s = 0.0;
  for (const auto& atom : mu.atoms())
    if (square_contains(qa, atom.z) && square_contains(qz, atom.z))
      s += atom.mass;
  return s;
}

double product_square_mass(const RadialMeasure& nu, const HalfPlanePoint& a) {
  return nu.mass_interval(2.0 * a.re, /*closed=*/true) * 2.0 * a.re;
}

double hyperbolic_distance(const HalfPlanePoint& z1, const HalfPlanePoint& z2) {
  const double dx = z1.re - z2.re;
  const double dy = z1.im - z2.im;
  return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * z1.re * z2.re));
}

}  // namespace carleson
