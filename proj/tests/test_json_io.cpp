#include <cmath>

#include "doctest.h"

#include "carleson/json_io.hpp"

using namespace carleson;

TEST_SUITE_BEGIN("json_io");

TEST_CASE("radial measure schema round trip") {
  const auto j = json::parse(
      R"({"atoms":[{"r":0.0,"mass":0.159154943}],
          "pieces":[{"c":0.318309886,"alpha":0.0,"from":0.0,"to":null}]})");
  const RadialMeasure m = parse_radial_measure(j);
  REQUIRE(m.atoms().size() == 1);
  REQUIRE(m.pieces().size() == 1);
  CHECK(m.atoms()[0].mass == 0.159154943);
  CHECK(std::isinf(m.pieces()[0].to));

  const json back = to_json(m);
  const RadialMeasure again = parse_radial_measure(back);
  CHECK(again.atoms()[0].mass == m.atoms()[0].mass);
  CHECK(again.pieces()[0].c == m.pieces()[0].c);
  CHECK(std::isinf(again.pieces()[0].to));
}

TEST_CASE("radial measure presets") {
  CHECK(parse_radial_measure(json("dirac0_over_2pi")).atoms().size() == 1);
  CHECK(parse_radial_measure(json("lebesgue_over_pi")).pieces().size() == 1);
  const auto b = parse_radial_measure(json::parse(R"({"bergman_alpha":1.5})"));
  CHECK(b.pieces()[0].alpha == 1.5);
  CHECK_THROWS_AS(parse_radial_measure(json("nonsense")),
                  std::invalid_argument);
}

TEST_CASE("space spec presets and schema") {
  CHECK(parse_space_spec(json("hardy")).preset() == SpacePreset::Hardy);
  CHECK(parse_space_spec(json("dirichlet")).m() == 1);
  CHECK(parse_space_spec(json::parse(R"({"bergman_alpha":0.5})")).preset() ==
        SpacePreset::Bergman);
  const auto j = json::parse(
      R"({"measures":["dirac0_over_2pi","lebesgue_over_pi"]})");
  CHECK(parse_space_spec(j).m() == 1);
  const json round = to_json(parse_space_spec(j));
  CHECK(parse_space_spec(round).m() == 1);
}

TEST_CASE("plane measure and diagonal system schemas") {
  const auto mu = parse_plane_measure(
      json::parse(R"({"atoms":[{"re":1.0,"im":0.0,"mass":1.0}]})"));
  CHECK(mu.total_mass() == 1.0);
  const auto round = parse_plane_measure(to_json(mu));
  CHECK(round.atoms()[0].z.re == 1.0);

  const auto sys = parse_diagonal_system(json::parse(
      R"({"modes":[{"lambda_re":-1.0,"lambda_im":0.0,"b_re":1.0,"b_im":0.0}]})"));
  CHECK(sys.eigenvalues.size() == 1);
  const auto sys2 = parse_diagonal_system(to_json(sys));
  CHECK(sys2.control[0] == sys.control[0]);
}

TEST_CASE("consistency report serialization carries the interface keys") {
  const auto rep = consistency_report(
      SpaceSpec::hardy(), PlaneMeasure({{HalfPlanePoint(1.0, 0.0), 1.0}}));
  const json j = to_json(rep);
  CHECK(j.contains("exact"));
  CHECK(j.contains("kernel_sup"));
  CHECK(j.contains("square_necessary"));
  CHECK(j.contains("witnesses"));
  CHECK(j.at("ordering_ok").get<bool>());
  // round-trip parse
  const json again = json::parse(j.dump());
  CHECK(again.at("exact").get<double>() == doctest::Approx(0.5));
}

TEST_CASE("tree serialization") {
  const WeightedTree t = decompose(HalfPlanePoint(1.0, 0.0), 1, 2, 0, 1);
  const json j = to_json(t);
  CHECK(j.at("vertices").size() == t.size());
  CHECK(j.at("vertices")[0].contains("k"));
  CHECK(j.at("vertices")[0].contains("parent"));
}

TEST_SUITE_END();
