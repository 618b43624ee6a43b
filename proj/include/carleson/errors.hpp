#pragma once

#include <stdexcept>
#include <string>

namespace carleson {

// Thrown when an adaptive quadrature exhausts its evaluation budget before
// reaching the requested tolerance.
struct NonconvergentQuadrature : std::runtime_error {
  explicit NonconvergentQuadrature(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown by delta2_ratio when some grid point r has nu[0,r) = 0, making the
// doubling ratio undefined.
struct ZeroMass : std::runtime_error {
  explicit ZeroMass(const std::string& what) : std::runtime_error(what) {}
};

struct EigenFailure : std::runtime_error {
  explicit EigenFailure(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateInput : std::runtime_error {
  explicit DegenerateInput(const std::string& what)
      : std::runtime_error(what) {}
};

// A centre where every nu_n(closure(Q(a))) vanishes; the necessary-test ratio
// is undefined there.
struct DegenerateDenominator : std::runtime_error {
  explicit DegenerateDenominator(const std::string& what)
      : std::runtime_error(what) {}
};

struct AtomOutsideTruncation : std::runtime_error {
  explicit AtomOutsideTruncation(const std::string& what)
      : std::runtime_error(what) {}
};

// An ordering invariant between test constants failed; this signals a toolkit
// bug, not a property of the measure under test.
struct InconsistencyDetected : std::runtime_error {
  explicit InconsistencyDetected(const std::string& what)
      : std::runtime_error(what) {}
};

struct PropertyViolation : std::runtime_error {
  explicit PropertyViolation(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace carleson
