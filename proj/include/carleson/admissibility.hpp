#pragma once

#include <complex>
#include <vector>

#include "carleson/carleson_tests.hpp"

namespace carleson {

// Diagonal semigroup data: eigenvalues in the open left half-plane and the
// control coefficients of B in the eigenvector basis.
struct DiagonalSystem {
  std::vector<std::complex<double>> eigenvalues;
  std::vector<std::complex<double>> control;

  DiagonalSystem(std::vector<std::complex<double>> lambdas,
                 std::vector<std::complex<double>> b);
};

// mu = sum_k |b_k|^2 delta_{-lambda_k}; coincident points merge by mass
// addition and zero coefficients drop out.
PlaneMeasure admissibility_measure(const DiagonalSystem& sys);

struct AdmissibilityReport {
  PlaneMeasure measure;
  ConsistencyReport tests;
  // The reported constant equals the Carleson embedding constant of mu; the
  // admissibility constant m_0^2 matches it only up to the Riesz-basis
  // equivalence constants, which are not part of the spectral data.
  bool riesz_caveat = true;
};

AdmissibilityReport admissibility_report(const DiagonalSystem& sys,
                                         const SpaceSpec& spec,
                                         const GridSpec& scan = {},
                                         double tol = 1e-9,
                                         Exec exec = Exec::Parallel);

}  // namespace carleson
