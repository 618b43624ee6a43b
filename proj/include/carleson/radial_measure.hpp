#pragma once

#include <limits>
#include <vector>

namespace carleson {

struct RadialAtom {
  double r;     // location in [0, inf)
  double mass;  // > 0
};

// One density component c * r^alpha dr on [from, to); to may be +inf.
struct DensityPiece {
  double c;
  double alpha;  // > -1
  double from = 0.0;
  double to = std::numeric_limits<double>::infinity();
};

// A positive Borel measure on [0, inf): finitely many atoms plus power-law
// density pieces with pairwise disjoint supports.  Every interval mass
// [0, r) is finite by construction.  Immutable after construction.
class RadialMeasure {
 public:
  RadialMeasure(std::vector<RadialAtom> atoms, std::vector<DensityPiece> pieces);

  // 2*pi*nu = delta_0, the Hardy-space measure.
  static RadialMeasure dirac0_over_2pi();
  // d nu(r) = dr/pi (n=1 component of the Dirichlet space).
  static RadialMeasure lebesgue_over_pi();
  // d nu(r) = r^alpha dr/pi, alpha > -1 (weighted Bergman).
  static RadialMeasure bergman_alpha(double alpha);

  const std::vector<RadialAtom>& atoms() const { return atoms_; }
  const std::vector<DensityPiece>& pieces() const { return pieces_; }

  // nu[0, r) (closed=false) or nu[0, r] (closed=true), r > 0.
  double mass_interval(double r, bool closed = false) const;

 private:
  std::vector<RadialAtom> atoms_;
  std::vector<DensityPiece> pieces_;
};

struct Delta2Report {
  double ratio_sup = 0.0;         // estimated doubling constant R
  std::vector<double> grid;       // sampled r values
  double witness_r = 0.0;         // grid point attaining the max
  bool closed_form = false;       // true when R is the analytic supremum
};

// Default log-spaced grid for the doubling-ratio scan: 64 points covering
// [1e-6, 1e6].
std::vector<double> default_delta2_grid();

// sup over the grid of nu[0,2r)/nu[0,r).  Throws ZeroMass when some
// denominator vanishes.  Recognized closed-form families (all atoms at 0;
// a single piece supported on all of [0,inf)) report the analytic supremum.
Delta2Report delta2_ratio(const RadialMeasure& m,
                          const std::vector<double>& r_grid);

// w_n(t) = 2*pi*t^{2n} * integral of e^{-2rt} d nu(r), t > 0.
// Pieces supported on [0,inf) evaluate through the Gamma closed form;
// other supports go through adaptive quadrature (relative tolerance 1e-10)
// with a certified truncation bound.  Throws NonconvergentQuadrature.
double weight_w_n(const RadialMeasure& m, int n, double t);

}  // namespace carleson
