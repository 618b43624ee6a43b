#include "carleson/json_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace carleson {

namespace {

const char* kind_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::ExactConstant: return "exact_constant";
    case VerdictKind::SufficientCertificate: return "sufficient_certificate";
    case VerdictKind::NecessaryViolation: return "necessary_violation";
    case VerdictKind::NecessaryPass: return "necessary_pass";
    case VerdictKind::LowerBound: return "lower_bound";
  }
  return "unknown";
}

json point_json(const HalfPlanePoint& p) {
  return json{{"re", p.re}, {"im", p.im}};
}

}  // namespace

RadialMeasure parse_radial_measure(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "dirac0_over_2pi") return RadialMeasure::dirac0_over_2pi();
    if (name == "lebesgue_over_pi") return RadialMeasure::lebesgue_over_pi();
    throw std::invalid_argument("unknown radial-measure preset: " + name);
  }
  if (j.is_object() && j.contains("bergman_alpha") && j.size() == 1)
    return RadialMeasure::bergman_alpha(j.at("bergman_alpha").get<double>());

  std::vector<RadialAtom> atoms;
  std::vector<DensityPiece> pieces;
  if (j.contains("atoms"))
    for (const auto& a : j.at("atoms"))
      atoms.push_back({a.at("r").get<double>(), a.at("mass").get<double>()});
  if (j.contains("pieces"))
    for (const auto& p : j.at("pieces")) {
      DensityPiece piece;
      piece.c = p.at("c").get<double>();
      piece.alpha = p.at("alpha").get<double>();
      piece.from = p.value("from", 0.0);
      piece.to = p.contains("to") && !p.at("to").is_null()
                     ? p.at("to").get<double>()
                     : std::numeric_limits<double>::infinity();
      pieces.push_back(piece);
    }
  return RadialMeasure(std::move(atoms), std::move(pieces));
}

json to_json(const RadialMeasure& m) {
  json atoms = json::array(), pieces = json::array();
  for (const auto& a : m.atoms()) atoms.push_back({{"r", a.r}, {"mass", a.mass}});
  for (const auto& p : m.pieces()) {
    json jp{{"c", p.c}, {"alpha", p.alpha}, {"from", p.from}};
    jp["to"] = std::isinf(p.to) ? json(nullptr) : json(p.to);
    pieces.push_back(jp);
  }
  return json{{"atoms", atoms}, {"pieces", pieces}};
}

SpaceSpec parse_space_spec(const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "hardy") return SpaceSpec::hardy();
    if (name == "dirichlet") return SpaceSpec::dirichlet();
    throw std::invalid_argument("unknown space preset: " + name);
  }
  if (j.is_object() && j.contains("bergman_alpha") && j.size() == 1)
    return SpaceSpec::bergman(j.at("bergman_alpha").get<double>());
  std::vector<RadialMeasure> measures;
  for (const auto& jm : j.at("measures"))
    measures.push_back(parse_radial_measure(jm));
  return SpaceSpec(std::move(measures));
}

SpaceSpec parse_space_spec(const std::string& preset_or_path) {
  if (preset_or_path == "hardy" || preset_or_path == "dirichlet")
    return parse_space_spec(json(preset_or_path));
  if (preset_or_path.rfind("bergman:", 0) == 0)
    return SpaceSpec::bergman(std::stod(preset_or_path.substr(8)));
  return parse_space_spec(load_json_file(preset_or_path));
}

json to_json(const SpaceSpec& spec) {
  json measures = json::array();
  for (const auto& m : spec.measures()) measures.push_back(to_json(m));
  return json{{"measures", measures}};
}

PlaneMeasure parse_plane_measure(const json& j) {
  std::vector<PlaneAtom> atoms;
  for (const auto& a : j.at("atoms"))
    atoms.push_back({HalfPlanePoint(a.at("re").get<double>(),
                                    a.at("im").get<double>()),
                     a.at("mass").get<double>()});
  return PlaneMeasure(std::move(atoms));
}

json to_json(const PlaneMeasure& mu) {
  json atoms = json::array();
  for (const auto& a : mu.atoms())
    atoms.push_back({{"re", a.z.re}, {"im", a.z.im}, {"mass", a.mass}});
  return json{{"atoms", atoms}};
}

DiagonalSystem parse_diagonal_system(const json& j) {
  std::vector<std::complex<double>> lambdas, b;
  for (const auto& m : j.at("modes")) {
    lambdas.emplace_back(m.at("lambda_re").get<double>(),
                         m.value("lambda_im", 0.0));
    b.emplace_back(m.at("b_re").get<double>(), m.value("b_im", 0.0));
  }
  return DiagonalSystem(std::move(lambdas), std::move(b));
}

json to_json(const DiagonalSystem& sys) {
  json modes = json::array();
  for (std::size_t k = 0; k < sys.eigenvalues.size(); ++k)
    modes.push_back({{"lambda_re", sys.eigenvalues[k].real()},
                     {"lambda_im", sys.eigenvalues[k].imag()},
                     {"b_re", sys.control[k].real()},
                     {"b_im", sys.control[k].imag()}});
  return json{{"modes", modes}};
}

json to_json(const CarlesonVerdict& v) {
  json j{{"kind", kind_name(v.kind)}, {"constant", v.constant}};
  if (v.witness) j["witness"] = point_json(*v.witness);
  if (!v.details.empty()) j["details"] = v.details;
  return j;
}

json to_json(const ConsistencyReport& rep) {
  json j{{"exact", rep.exact.constant},
         {"kernel_sup", rep.kernel_sup.constant},
         {"square_necessary", rep.square_necessary.constant},
         {"necessity_K", rep.necessity_K},
         {"ordering_ok", rep.ordering_ok}};
  json w;
  if (rep.exact.witness) w["exact"] = point_json(*rep.exact.witness);
  if (rep.kernel_sup.witness)
    w["kernel_sup"] = point_json(*rep.kernel_sup.witness);
  if (rep.square_necessary.witness)
    w["square_necessary"] = point_json(*rep.square_necessary.witness);
  j["witnesses"] = w.is_null() ? json::object() : w;
  if (rep.dirichlet_squares) {
    j["dirichlet_square_sufficient"] = rep.dirichlet_squares->sufficient_sup;
    j["dirichlet_square_necessary"] = rep.dirichlet_squares->necessary_sup;
  }
  if (rep.dirichlet_adjoint_best)
    j["dirichlet_adjoint_best"] = *rep.dirichlet_adjoint_best;
  if (!rep.violations.empty()) j["violations"] = rep.violations;
  return j;
}

json to_json(const WeightedTree& tree) {
  json verts = json::array();
  for (std::size_t v = 0; v < tree.size(); ++v) {
    json jv{{"parent", tree.parent[v]},
            {"mu", tree.mu[v]},
            {"rho", tree.rho[v]}};
    if (tree.rects[v]) {
      jv["k"] = tree.rects[v]->k;
      jv["l"] = tree.rects[v]->l;
    }
    verts.push_back(jv);
  }
  return json{{"p", tree.p}, {"q", tree.q}, {"vertices", verts}};
}

json to_json(const AdmissibilityReport& rep) {
  json j = to_json(rep.tests);
  j["measure"] = to_json(rep.measure);
  j["riesz_basis_caveat"] =
      "constants are Carleson embedding constants; the admissibility "
      "constant matches up to the Riesz-basis equivalence constants";
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  in >> j;
  return j;
}

}  // namespace carleson
