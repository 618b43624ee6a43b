#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "carleson/errors.hpp"
#include "carleson/radial_measure.hpp"

using namespace carleson;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

TEST_SUITE_BEGIN("radial_measure");

TEST_CASE("mass_interval basics") {
  const RadialMeasure dirac({{0.0, 1.0}}, {});
  CHECK(dirac.mass_interval(5.0) == 1.0);

  const RadialMeasure lebesgue({}, {{1.0, 0.0, 0.0, kInf}});
  CHECK(lebesgue.mass_interval(3.0) == doctest::Approx(3.0).epsilon(1e-15));

  const RadialMeasure rdr({}, {{1.0, 1.0, 0.0, kInf}});
  CHECK(rdr.mass_interval(2.0) == doctest::Approx(2.0).epsilon(1e-15));

  SUBCASE("closed endpoint picks up an atom") {
    const RadialMeasure m({{2.0, 0.5}}, {});
    CHECK(m.mass_interval(2.0, false) == 0.0);
    CHECK(m.mass_interval(2.0, true) == 0.5);
  }
}

TEST_CASE("mass_interval is monotone") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> unif(0.01, 5.0);
  const RadialMeasure m({{0.0, 0.3}, {1.5, 1.0}},
                        {{0.7, -0.5, 0.0, 1.0}, {0.2, 2.0, 2.0, 4.0}});
  for (int i = 0; i < 200; ++i) {
    double r1 = unif(rng), r2 = unif(rng);
    if (r1 > r2) std::swap(r1, r2);
    CHECK(m.mass_interval(r1) <= m.mass_interval(r2) + 1e-15);
  }
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(RadialMeasure({{0.0, -1.0}}, {}), std::invalid_argument);
  CHECK_THROWS_AS(RadialMeasure({}, {{1.0, -1.5, 0.0, kInf}}),
                  std::invalid_argument);
  // overlapping supports
  CHECK_THROWS_AS(RadialMeasure({}, {{1.0, 0.0, 0.0, 2.0}, {1.0, 0.0, 1.0, 3.0}}),
                  std::invalid_argument);
}

TEST_CASE("doubling ratios of the closed-form families") {
  const auto grid = default_delta2_grid();

  auto rep = delta2_ratio(RadialMeasure::dirac0_over_2pi(), grid);
  CHECK(rep.ratio_sup == 1.0);
  CHECK(rep.closed_form);

  rep = delta2_ratio(RadialMeasure::lebesgue_over_pi(), grid);
  CHECK(rep.ratio_sup == 2.0);

  rep = delta2_ratio(RadialMeasure({}, {{1.0, 1.0, 0.0, kInf}}), grid);
  CHECK(rep.ratio_sup == 4.0);

  SUBCASE("grid scan agrees with the analytic value") {
    const RadialMeasure m({}, {{2.3, 0.7, 0.0, kInf}});
    double grid_max = 0.0;
    for (double r : grid)
      grid_max = std::fmax(grid_max, m.mass_interval(2 * r) / m.mass_interval(r));
    CHECK(grid_max ==
          doctest::Approx(std::pow(2.0, 1.7)).epsilon(1e-12));
  }
}

TEST_CASE("doubling ratio is undefined without mass near zero") {
  const RadialMeasure m({{5.0, 1.0}}, {});
  CHECK_THROWS_AS(delta2_ratio(m, default_delta2_grid()), ZeroMass);
}

TEST_CASE("doubling ratio is always >= 1") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unif(0.1, 2.0);
  for (int i = 0; i < 20; ++i) {
    const RadialMeasure m({{0.0, unif(rng)}},
                          {{unif(rng), unif(rng), 0.0, kInf}});
    CHECK(delta2_ratio(m, default_delta2_grid()).ratio_sup >= 1.0);
  }
}

TEST_CASE("weights of the preset measures") {
  const auto hardy = RadialMeasure::dirac0_over_2pi();
  CHECK(weight_w_n(hardy, 0, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(weight_w_n(hardy, 0, 7.0) == doctest::Approx(1.0).epsilon(1e-14));

  const auto leb = RadialMeasure::lebesgue_over_pi();
  CHECK(weight_w_n(leb, 1, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(weight_w_n(leb, 1, 3.0) == doctest::Approx(3.0).epsilon(1e-12));

  // Bergman alpha=0: w(t) = 1/t
  const auto b0 = RadialMeasure::bergman_alpha(0.0);
  CHECK(weight_w_n(b0, 0, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(weight_w_n(b0, 0, 4.0) == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("weight factorization in the t^{2n} prefactor") {
  const RadialMeasure m({{0.3, 0.8}}, {{0.5, 0.25, 0.0, kInf}});
  for (double t : {0.2, 1.0, 3.7}) {
    const double w0 = weight_w_n(m, 0, t);
    for (int n : {1, 2})
      CHECK(weight_w_n(m, n, t) ==
            doctest::Approx(std::pow(t, 2.0 * n) * w0).epsilon(1e-12));
  }
}

TEST_CASE("w_0 is decreasing in t") {
  const RadialMeasure m({{0.0, 0.5}, {1.0, 0.2}}, {{0.3, 0.5, 0.0, kInf}});
  double prev = weight_w_n(m, 0, 0.125);
  for (double t = 0.25; t < 64.0; t *= 2.0) {
    const double w = weight_w_n(m, 0, t);
    CHECK(w <= prev * (1.0 + 1e-13));
    prev = w;
  }
}

TEST_CASE("piece quadrature splits agree with the Gamma closed form") {
  // [0,inf) evaluated in closed form must equal [0,B) + [B,inf) through the
  // quadrature paths, including a singular-at-zero exponent
  for (double alpha : {-0.5, 0.5, 2.0}) {
    const RadialMeasure whole({}, {{1.0, alpha, 0.0, kInf}});
    const RadialMeasure low({}, {{1.0, alpha, 0.0, 1.7}});
    const RadialMeasure high({}, {{1.0, alpha, 1.7, kInf}});
    for (double t : {0.4, 1.0, 2.5}) {
      const double sum = weight_w_n(low, 0, t) + weight_w_n(high, 0, t);
      CHECK(sum == doctest::Approx(weight_w_n(whole, 0, t)).epsilon(1e-9));
    }
  }
}

TEST_SUITE_END();
