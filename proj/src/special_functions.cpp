#include "carleson/special_functions.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace carleson {

namespace {

constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

// E1(z) = -gamma - ln z + sum_{n>=1} (-1)^{n+1} z^n / (n * n!)
std::complex<double> e1_series(std::complex<double> z) {
  std::complex<double> sum = 0.0;
  std::complex<double> term = 1.0;  // z^n / n!
  for (int n = 1; n <= 64; ++n) {
    term *= z / static_cast<double>(n);
    const std::complex<double> add = term / static_cast<double>(n);
    sum += (n % 2 == 1) ? add : -add;
    if (std::abs(add) < 1e-18 * (1.0 + std::abs(sum))) break;
  }
  return -kEulerGamma - std::log(z) + sum;
}

// Modified Lentz evaluation of the continued fraction
//   e^z E1(z) = 1/(z+1- 1/(z+3- 4/(z+5- 9/(...)))).
std::complex<double> e1_cf_scaled(std::complex<double> z) {
  const double tiny = 1e-290;
  std::complex<double> b = z + 1.0;
  std::complex<double> c = 1.0 / tiny;
  std::complex<double> d = 1.0 / b;
  std::complex<double> h = d;
  for (int i = 1; i <= 200; ++i) {
    const double a = -static_cast<double>(i) * static_cast<double>(i);
    b += 2.0;
    d = 1.0 / (a * d + b);
    c = b + a / c;
    const std::complex<double> del = c * d;
    h *= del;
    if (std::abs(del - 1.0) < 1e-16) return h;
  }
  return h;  // full precision not reached; best effort after 200 terms
}

}  // namespace

std::complex<double> expint_e1(std::complex<double> z) {
  if (z.real() <= 0.0 && z.imag() == 0.0)
    throw std::invalid_argument("expint_e1: need Re(z) > 0 or Im(z) != 0");
  if (std::abs(z) <= 2.0) return e1_series(z);
  return std::exp(-z) * e1_cf_scaled(z);
}

double expint_e1(double x) { return expint_e1(std::complex<double>(x)).real(); }

std::complex<double> expint_e1_scaled(std::complex<double> z) {
  if (std::abs(z) <= 2.0) return std::exp(z) * e1_series(z);
  return e1_cf_scaled(z);
}

}  // namespace carleson
