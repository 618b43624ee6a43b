#pragma once

#include <complex>

namespace carleson {

// Exponential integral E1(z) = integral over [1, inf) of e^{-zt}/t dt,
// for Re(z) > 0.  Small |z| uses the alternating power series around the
// log singularity; larger |z| uses the modified-Lentz continued fraction.
// This routine is deliberately independent of the quadrature engine: it
// serves as the second route for kernel cross-checks.
double expint_e1(double x);
std::complex<double> expint_e1(std::complex<double> z);

// e^z * E1(z); stable for large Re(z) where E1 underflows.
std::complex<double> expint_e1_scaled(std::complex<double> z);

}  // namespace carleson
