#include "carleson/tree.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "carleson/carleson_tests.hpp"
#include "carleson/errors.hpp"

namespace carleson {

std::vector<int> WeightedTree::topological_order() const {
  const int n = static_cast<int>(size());
  std::vector<int> order;
  order.reserve(n);
  std::vector<int> stack;
  for (int v = 0; v < n; ++v)
    if (parent[v] < 0) stack.push_back(v);
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int c : children[v]) stack.push_back(c);
  }
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("tree has unreachable vertices");
  return order;
}

WeightedTree make_tree(std::vector<int> parents, double p, double q) {
  if (!(1.0 < p && p <= q))
    throw std::invalid_argument("exponents must satisfy 1 < p <= q");
  const int n = static_cast<int>(parents.size());
  WeightedTree t;
  t.parent = std::move(parents);
  t.rects.assign(n, std::nullopt);
  t.children.assign(n, {});
  t.mu.assign(n, 0.0);
  t.rho.assign(n, 1.0);
  t.p = p;
  t.q = q;
  for (int v = 0; v < n; ++v) {
    const int pa = t.parent[v];
    if (pa == v || pa >= n)
      throw std::invalid_argument("invalid parent index");
    if (pa >= 0) t.children[pa].push_back(v);
  }
  t.topological_order();  // throws on cycles
  return t;
}

WeightedTree decompose(const HalfPlanePoint& zeta, int k_min, int k_max,
                       int l_min, int l_max) {
  if (k_min > k_max || l_min > l_max)
    throw std::invalid_argument("decompose requires nonempty ranges");
  const int n_l = l_max - l_min + 1;
  const int n = (k_max - k_min + 1) * n_l;
  auto index_of = [&](int k, int l) -> int {
    if (k < k_min || k > k_max || l < l_min || l > l_max) return -1;
    return (k - k_min) * n_l + (l - l_min);
  };
  std::vector<int> parents(n, -1);
  WeightedTree t;
  t.rects.assign(n, std::nullopt);
  for (int k = k_min; k <= k_max; ++k)
    for (int l = l_min; l <= l_max; ++l) {
      const int idx = index_of(k, l);
      t.rects[idx] = Rectangle{k, l, zeta};
      const int l_up = (l >= 0) ? l / 2 : (l - 1) / 2;  // floor(l/2)
      parents[idx] = index_of(k + 1, l_up);
    }
  t.parent = std::move(parents);
  t.children.assign(n, {});
  t.mu.assign(n, 0.0);
  t.rho.assign(n, 1.0);
  for (int v = 0; v < n; ++v)
    if (t.parent[v] >= 0) t.children[t.parent[v]].push_back(v);
  return t;
}

void assign_measure(WeightedTree& tree, const PlaneMeasure& mu_plane) {
  std::fill(tree.mu.begin(), tree.mu.end(), 0.0);
  for (const auto& atom : mu_plane.atoms()) {
    bool placed = false;
    for (std::size_t v = 0; v < tree.size(); ++v) {
      if (tree.rects[v] && tree.rects[v]->contains(atom.z)) {
        tree.mu[v] += atom.mass;
        placed = true;
        break;
      }
    }
    if (!placed)
      throw AtomOutsideTruncation(
          "atom at (" + std::to_string(atom.z.re) + ", " +
          std::to_string(atom.z.im) + ") lies outside the truncation");
  }
}

void assign_rho(WeightedTree& tree,
                const std::function<double(const HalfPlanePoint&)>& rho) {
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (!tree.rects[v])
      throw std::invalid_argument("assign_rho needs geometry-tagged vertices");
    const double r = rho(tree.rects[v]->centroid());
    if (!(r > 0.0)) throw std::invalid_argument("rho must be positive");
    tree.rho[v] = r;
  }
}

std::complex<double> primitive(const WeightedTree& tree,
                               const std::vector<std::complex<double>>& phi,
                               int x) {
  if (phi.size() != tree.size())
    throw std::invalid_argument("phi must assign a value to every vertex");
  std::complex<double> s = 0.0;
  for (int v = x; v >= 0; v = tree.parent[v]) s += phi[v];
  return s;
}

ConditionResult condition_constant(const WeightedTree& tree,
                                   bool include_whole_tree) {
  const int n = static_cast<int>(tree.size());
  const double pp = tree.p / (tree.p - 1.0);
  const double qp = tree.q / (tree.q - 1.0);
  const auto order = tree.topological_order();

  // subtree mass T and subtree sum G of T(x)^{p'} rho(x)^{1-p'}
  std::vector<double> subtree_mass(n, 0.0), subtree_g(n, 0.0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    double tm = tree.mu[v];
    for (int c : tree.children[v]) tm += subtree_mass[c];
    subtree_mass[v] = tm;
    double g = std::pow(tm, pp) * std::pow(tree.rho[v], 1.0 - pp);
    if (tm == 0.0) g = 0.0;  // 0^{p'} with any rho
    for (int c : tree.children[v]) g += subtree_g[c];
    subtree_g[v] = g;
  }

  ConditionResult res;
  auto consider = [&](double lhs_inner, double rhs, std::optional<int> w) {
    if (rhs == 0.0) {
      if (lhs_inner == 0.0) return;  // 0/0: skip
      res.infinite = true;
      res.witness_vertex = w;
      return;
    }
    const double ratio = std::pow(lhs_inner, qp / pp) / rhs;
    if (ratio > res.constant) {
      res.constant = ratio;
      res.witness_vertex = w;
    }
  };
  for (int v = 0; v < n; ++v)
    consider(subtree_g[v], subtree_mass[v], v);
  if (include_whole_tree) {
    double g_tot = 0.0, m_tot = 0.0;
    for (int v = 0; v < n; ++v)
      if (tree.parent[v] < 0) {
        g_tot += subtree_g[v];
        m_tot += subtree_mass[v];
      }
    consider(g_tot, m_tot, std::nullopt);
  }
  if (res.infinite) res.constant = std::numeric_limits<double>::infinity();
  return res;
}

double embedding_norm_oracle(const WeightedTree& tree) {
  if (tree.p != 2.0 || tree.q != 2.0)
    throw std::invalid_argument("embedding_norm_oracle requires p = q = 2");
  const int n = static_cast<int>(tree.size());
  if (n == 0) return 0.0;
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(n, n);
  for (int x = 0; x < n; ++x) {
    const double wx = std::sqrt(tree.mu[x]);
    for (int v = x; v >= 0; v = tree.parent[v])
      A(x, v) = wx / std::sqrt(tree.rho[v]);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A.transpose() * A,
                                                    Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw EigenFailure("embedding-norm eigensolve did not converge");
  return std::sqrt(std::fmax(0.0, es.eigenvalues().maxCoeff()));
}

HardyBoundReport hardy_inequality_bound_check(const WeightedTree& tree) {
  HardyBoundReport rep;
  const double norm = embedding_norm_oracle(tree);
  rep.norm_sq = norm * norm;
  const auto cond = condition_constant(tree);
  rep.condition = cond.constant;
  rep.condition_infinite = cond.infinite;
  if (!cond.infinite) {
    rep.pass = rep.norm_sq <=
               rep.coefficient * rep.condition * (1.0 + 1e-9) + 1e-12;
    if (!rep.pass)
      throw PropertyViolation(
          "embedding norm^2 = " + std::to_string(rep.norm_sq) +
          " exceeds (4096/15) * " + std::to_string(rep.condition));
  }
  return rep;
}

double regular_weight_modulus(
    const std::function<double(const HalfPlanePoint&)>& rho, double eps,
    const std::vector<std::pair<HalfPlanePoint, HalfPlanePoint>>& samples) {
  double delta = 0.0;
  for (const auto& [z1, z2] : samples) {
    if (hyperbolic_distance(z1, z2) > eps * (1.0 + 1e-12))
      throw std::invalid_argument(
          "sample pair exceeds the requested hyperbolic distance");
    delta = std::fmax(delta, rho(z1) / rho(z2));
  }
  return delta;
}

ContinuumTreeReport continuum_to_tree_condition(
    const PlaneMeasure& mu, const std::vector<HalfPlanePoint>& a_list,
    double rho_const, const HalfPlanePoint& zeta, int k_min, int k_max,
    int l_min, int l_max) {
  ContinuumTreeReport rep;
  for (const auto& a : a_list) {
    if (square_mass(mu, a) == 0.0) continue;
    rep.continuum_constant = std::fmax(
        rep.continuum_constant,
        square_intersection_integral_test(mu, a, IntersectionVariant::Tree,
                                          rho_const));
  }
  WeightedTree t = decompose(zeta, k_min, k_max, l_min, l_max);
  assign_measure(t, mu);
  assign_rho(t, [rho_const](const HalfPlanePoint&) { return rho_const; });
  const auto cond = condition_constant(t, /*include_whole_tree=*/false);
  rep.tree_constant = cond.constant;
  rep.tree_infinite = cond.infinite;
  rep.empirical_ratio = rep.continuum_constant > 0.0
                            ? rep.tree_constant / rep.continuum_constant
                            : 0.0;
  return rep;
}

WeightedTree random_tree(std::mt19937_64& rng, int max_vertices) {
  std::uniform_int_distribution<int> size_dist(1, max_vertices);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const int n = size_dist(rng);
  std::vector<int> parents(n, -1);
  for (int v = 1; v < n; ++v) {
    // occasionally start a new component to exercise the forest conventions
    if (unif(rng) < 0.05) {
      parents[v] = -1;
    } else {
      std::uniform_int_distribution<int> pick(0, v - 1);
      parents[v] = pick(rng);
    }
  }
  WeightedTree t = make_tree(std::move(parents));
  for (int v = 0; v < n; ++v) {
    t.mu[v] = 1.0 - unif(rng);   // uniform in (0, 1]
    t.rho[v] = 1.0 - unif(rng);
  }
  return t;
}

}  // namespace carleson
