#include "carleson/admissibility.hpp"

#include <stdexcept>

namespace carleson {

DiagonalSystem::DiagonalSystem(std::vector<std::complex<double>> lambdas,
                               std::vector<std::complex<double>> b)
    : eigenvalues(std::move(lambdas)), control(std::move(b)) {
  if (eigenvalues.size() != control.size())
    throw std::invalid_argument(
        "eigenvalue and control sequences must have equal length");
  for (const auto& l : eigenvalues)
    if (!(l.real() < 0.0))
      throw std::invalid_argument(
          "eigenvalues must lie in the open left half-plane");
}

PlaneMeasure admissibility_measure(const DiagonalSystem& sys) {
  std::vector<PlaneAtom> atoms;
  for (std::size_t k = 0; k < sys.eigenvalues.size(); ++k) {
    const double mass = std::norm(sys.control[k]);
    if (mass == 0.0) continue;
    const auto z = -sys.eigenvalues[k];
    atoms.push_back({HalfPlanePoint(z.real(), z.imag()), mass});
  }
  return PlaneMeasure(std::move(atoms)).merged();
}

AdmissibilityReport admissibility_report(const DiagonalSystem& sys,
                                         const SpaceSpec& spec,
                                         const GridSpec& scan, double tol,
                                         Exec exec) {
  AdmissibilityReport rep{admissibility_measure(sys), {}};
  rep.tests = consistency_report(spec, rep.measure, scan, tol, exec);
  return rep;
}

}  // namespace carleson
