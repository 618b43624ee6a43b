#pragma once

#include <string>

#include "json.hpp"

#include "carleson/admissibility.hpp"
#include "carleson/carleson_tests.hpp"
#include "carleson/tree.hpp"

namespace carleson {

using json = nlohmann::json;

// Schemas:
//   RadialMeasure  {"atoms":[{"r":0.0,"mass":0.159}],
//                   "pieces":[{"c":0.318,"alpha":0.0,"from":0.0,"to":null}]}
//                  or the presets "dirac0_over_2pi", "lebesgue_over_pi",
//                  {"bergman_alpha": a}
//   SpaceSpec      {"measures":[<RadialMeasure>...]} or "hardy",
//                  "dirichlet", {"bergman_alpha": a}
//   PlaneMeasure   {"atoms":[{"re":1.0,"im":0.0,"mass":1.0}]}
//   DiagonalSystem {"modes":[{"lambda_re":-1.0,"lambda_im":0.0,
//                             "b_re":1.0,"b_im":0.0}]}
// "to": null means +infinity.

RadialMeasure parse_radial_measure(const json& j);
json to_json(const RadialMeasure& m);

SpaceSpec parse_space_spec(const json& j);
SpaceSpec parse_space_spec(const std::string& preset_or_path);
json to_json(const SpaceSpec& spec);

PlaneMeasure parse_plane_measure(const json& j);
json to_json(const PlaneMeasure& mu);

DiagonalSystem parse_diagonal_system(const json& j);
json to_json(const DiagonalSystem& sys);

json to_json(const CarlesonVerdict& v);
json to_json(const ConsistencyReport& rep);
json to_json(const WeightedTree& tree);
json to_json(const AdmissibilityReport& rep);

json load_json_file(const std::string& path);

}  // namespace carleson
