#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "carleson/plane_geometry.hpp"

namespace carleson {

// Dyadic rectangle R_(k,l)(zeta) of the half-plane decomposition:
//   re(z)/re(zeta) in (2^{k-1}, 2^k],
//   (im(z)-im(zeta))/re(zeta) in [2^k l, 2^k (l+1)).
struct Rectangle {
  int k;
  int l;
  HalfPlanePoint zeta;

  double re_lo() const { return std::ldexp(zeta.re, k - 1); }
  double re_hi() const { return std::ldexp(zeta.re, k); }
  double im_lo() const { return zeta.im + std::ldexp(1.0, k) * l * zeta.re; }
  double im_hi() const {
    return zeta.im + std::ldexp(1.0, k) * (l + 1) * zeta.re;
  }
  double area() const { return std::ldexp(zeta.re * zeta.re, 2 * k - 1); }
  bool contains(const HalfPlanePoint& z) const {
    return z.re > re_lo() && z.re <= re_hi() && z.im >= im_lo() &&
           z.im < im_hi();
  }
  HalfPlanePoint centroid() const {
    return HalfPlanePoint(0.5 * (re_lo() + re_hi()),
                          0.5 * (im_lo() + im_hi()));
  }
};

// Finite tree (or forest, after truncation) with vertex weights mu >= 0 and
// rho > 0 and exponents 1 < p <= q < inf.  parent = -1 marks a local maximum
// (largest rectangle in its component; the paper's order decreases with
// area, so parents are the larger neighbours).
struct WeightedTree {
  std::vector<std::optional<Rectangle>> rects;
  std::vector<int> parent;
  std::vector<std::vector<int>> children;
  std::vector<double> mu;
  std::vector<double> rho;
  double p = 2.0;
  double q = 2.0;

  std::size_t size() const { return parent.size(); }
  // vertices ordered parents-before-children
  std::vector<int> topological_order() const;
};

// Builds a synthetic tree from a parent array (cycle-checked); weights start
// as mu = 0, rho = 1.
WeightedTree make_tree(std::vector<int> parents, double p = 2.0,
                       double q = 2.0);

// Truncated decomposition T(zeta) for k in [k_min,k_max], l in [l_min,l_max].
// Each vertex's parent is the level-(k+1) rectangle whose im-interval
// contains its own; vertices whose parent lies outside the truncation are
// local maxima.
WeightedTree decompose(const HalfPlanePoint& zeta, int k_min, int k_max,
                       int l_min, int l_max);

// Sets mu(vertex) = mass of atoms inside its rectangle.  Throws
// AtomOutsideTruncation when an atom escapes the decomposition.
void assign_measure(WeightedTree& tree, const PlaneMeasure& mu_plane);

// Sets rho(vertex) = rho(centroid of the rectangle).
void assign_rho(WeightedTree& tree,
                const std::function<double(const HalfPlanePoint&)>& rho);

// Primitive I phi(x) = sum of phi over the ancestor chain of x (inclusive).
std::complex<double> primitive(const WeightedTree& tree,
                               const std::vector<std::complex<double>>& phi,
                               int x);

struct ConditionResult {
  double constant = 0.0;
  bool infinite = false;
  std::optional<int> witness_vertex;  // empty: whole-tree (r = -infinity)
};

// Discrete embedding condition: max over r in vertices (and r = -infinity,
// the whole tree, unless include_whole_tree = false) of
//   (sum_{x in S(r)} (subtree mass of x)^{p'} rho(x)^{1-p'})^{q'/p'}
//   / sum_{x in S(r)} mu(x),
// with 0/0 skipped and finite/0 reported as infinite.
ConditionResult condition_constant(const WeightedTree& tree,
                                   bool include_whole_tree = true);

// Exact operator norm of I : l^2(rho) -> l^2(mu) on the finite tree
// (largest singular value of the weighted summation matrix); p = q = 2 only.
double embedding_norm_oracle(const WeightedTree& tree);

struct HardyBoundReport {
  double norm_sq = 0.0;
  double condition = 0.0;
  bool condition_infinite = false;
  double coefficient = 4096.0 / 15.0;
  bool pass = true;
};

// Quantitative form of the discrete embedding lemma at p = q = 2:
// norm^2 <= (4096/15) * condition constant.  Throws PropertyViolation on
// failure (a toolkit bug or an under-derived coefficient).
HardyBoundReport hardy_inequality_bound_check(const WeightedTree& tree);

// delta = max over sample pairs of rho(z1)/rho(z2); all pairs must lie
// within hyperbolic distance eps.
double regular_weight_modulus(
    const std::function<double(const HalfPlanePoint&)>& rho, double eps,
    const std::vector<std::pair<HalfPlanePoint, HalfPlanePoint>>& samples);

struct ContinuumTreeReport {
  double continuum_constant = 0.0;
  double tree_constant = 0.0;
  bool tree_infinite = false;
  double empirical_ratio = 0.0;  // tree / continuum (0 when continuum = 0)
};

// Evaluates the continuum square-intersection condition over the given
// centres and the discrete condition on the decomposition around zeta
// (constant weight rho, p = q = 2), reporting both constants and their ratio.
ContinuumTreeReport continuum_to_tree_condition(
    const PlaneMeasure& mu, const std::vector<HalfPlanePoint>& a_list,
    double rho_const, const HalfPlanePoint& zeta, int k_min, int k_max,
    int l_min, int l_max);

// Random tree or small forest with weights uniform in (0,1]; used by the
// property suites and the CLI.
WeightedTree random_tree(std::mt19937_64& rng, int max_vertices);

}  // namespace carleson
