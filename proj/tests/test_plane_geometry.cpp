#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"

#include "carleson/plane_geometry.hpp"

using namespace carleson;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("plane_geometry");

TEST_CASE("square membership uses the closed boundary conditions") {
  const CarlesonSquare q(HalfPlanePoint(1.0, 0.0));
  CHECK(square_contains(q, HalfPlanePoint(1.0, 0.0)));
  CHECK(square_contains(q, HalfPlanePoint(2.0, 1.0)));   // both edges closed
  CHECK(!square_contains(q, HalfPlanePoint(2.001, 0.0)));
  CHECK(!square_contains(q, HalfPlanePoint(1.0, 1.0 + 1e-9)));
}

TEST_CASE("square_mass") {
  const PlaneMeasure delta1({{HalfPlanePoint(1.0, 0.0), 1.0}});
  CHECK(square_mass(delta1, HalfPlanePoint(1.0, 0.0)) == 1.0);
  CHECK(square_mass(delta1, HalfPlanePoint(0.25, 0.0)) == 0.0);

  const PlaneMeasure mu({{HalfPlanePoint(1.0, 0.0), 0.5},
                         {HalfPlanePoint(3.0, 0.5), 0.25}});
  CHECK(square_mass(mu, HalfPlanePoint(2.0, 0.0)) == 0.75);
}

TEST_CASE("square_mass is additive in the measure") {
  const PlaneMeasure mu1({{HalfPlanePoint(0.7, -0.2), 0.4}});
  const PlaneMeasure mu2({{HalfPlanePoint(2.0, 1.0), 1.1}});
  PlaneMeasure both({{HalfPlanePoint(0.7, -0.2), 0.4},
                     {HalfPlanePoint(2.0, 1.0), 1.1}});
  for (double re : {0.3, 1.0, 2.5})
    for (double im : {-1.0, 0.0, 1.0}) {
      const HalfPlanePoint a(re, im);
      CHECK(square_mass(both, a) ==
            doctest::Approx(square_mass(mu1, a) + square_mass(mu2, a)));
    }
}

TEST_CASE("square_intersection_mass") {
  const PlaneMeasure delta1({{HalfPlanePoint(1.0, 0.0), 1.0}});
  const HalfPlanePoint a(1.0, 0.0);
  CHECK(square_intersection_mass(delta1, a, a) == 1.0);
  CHECK(square_intersection_mass(delta1, a, HalfPlanePoint(100.0, 1000.0)) ==
        0.0);
  const PlaneMeasure half({{HalfPlanePoint(0.5, 0.0), 1.0}});
  CHECK(square_intersection_mass(half, HalfPlanePoint(1.0, 0.0),
                                 HalfPlanePoint(0.5, 0.0)) == 1.0);
}

TEST_CASE("intersection mass never exceeds either square mass") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> re(0.05, 4.0), im(-3.0, 3.0),
      mass(0.01, 2.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<PlaneAtom> atoms;
    for (int k = 0; k < 5; ++k)
      atoms.push_back({HalfPlanePoint(re(rng), im(rng)), mass(rng)});
    const PlaneMeasure mu(atoms);
    const HalfPlanePoint a(re(rng), im(rng)), z(re(rng), im(rng));
    const double inter = square_intersection_mass(mu, a, z);
    CHECK(inter <= square_mass(mu, a) + 1e-15);
    CHECK(inter <= square_mass(mu, z) + 1e-15);
  }
}

TEST_CASE("every atom is caught by the square centred on it") {
  const PlaneMeasure mu({{HalfPlanePoint(0.3, 5.0), 0.7},
                         {HalfPlanePoint(4.0, -2.0), 0.1}});
  for (const auto& atom : mu.atoms())
    CHECK(square_mass(mu, atom.z) >= atom.mass);
}

TEST_CASE("product square masses") {
  const auto dirac = RadialMeasure::dirac0_over_2pi();
  CHECK(product_square_mass(dirac, HalfPlanePoint(1.0, 0.0)) ==
        doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK(product_square_mass(dirac, HalfPlanePoint(5.0, 2.0)) ==
        doctest::Approx(5.0 / kPi).epsilon(1e-15));
  const auto leb = RadialMeasure::lebesgue_over_pi();
  CHECK(product_square_mass(leb, HalfPlanePoint(1.0, 0.0)) ==
        doctest::Approx(4.0 / kPi).epsilon(1e-15));
}

TEST_CASE("hyperbolic distance") {
  const HalfPlanePoint one(1.0, 0.0);
  CHECK(hyperbolic_distance(one, one) == 0.0);
  CHECK(hyperbolic_distance(one, HalfPlanePoint(2.0, 0.0)) ==
        doctest::Approx(std::log(2.0)).epsilon(1e-15));  // acosh(1.25)

  SUBCASE("symmetry and triangle inequality") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> re(0.05, 6.0), im(-4.0, 4.0);
    for (int i = 0; i < 200; ++i) {
      const HalfPlanePoint x(re(rng), im(rng)), y(re(rng), im(rng)),
          z(re(rng), im(rng));
      CHECK(hyperbolic_distance(x, y) ==
            doctest::Approx(hyperbolic_distance(y, x)).epsilon(1e-12));
      CHECK(hyperbolic_distance(x, z) <=
            hyperbolic_distance(x, y) + hyperbolic_distance(y, z) + 1e-12);
    }
  }
}

TEST_CASE("measure helpers") {
  PlaneMeasure mu({{HalfPlanePoint(1.0, 1.0), 1.0},
                   {HalfPlanePoint(1.0, 1.0), 2.0},
                   {HalfPlanePoint(2.0, 0.0), 0.5}});
  CHECK(mu.total_mass() == 3.5);
  const PlaneMeasure merged = mu.merged();
  CHECK(merged.atoms().size() == 2);
  CHECK(merged.total_mass() == 3.5);
  CHECK(mu.scaled(2.0).total_mass() == 7.0);
  CHECK_THROWS_AS(HalfPlanePoint(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(PlaneMeasure({{HalfPlanePoint(1.0, 0.0), 0.0}}),
                  std::invalid_argument);
}

TEST_SUITE_END();
