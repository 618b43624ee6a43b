// Benchmark comparing the serial reference kernels against the OpenMP
// versions: Gram assembly with quadrature kernels, the kernel-sup grid scan,
// and the Riemann-sum oracle for the square-intersection integral.

#include <chrono>
#include <cstdio>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "carleson/carleson_tests.hpp"
#include "carleson/exec.hpp"

using namespace carleson;

namespace {

PlaneMeasure make_measure(int atoms, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> re(0.2, 4.0), im(-3.0, 3.0),
      mass(0.1, 1.0);
  std::vector<PlaneAtom> out;
  for (int k = 0; k < atoms; ++k)
    out.push_back({HalfPlanePoint(re(rng), im(rng)), mass(rng)});
  return PlaneMeasure(out);
}

template <class Fn>
double time_ms(Fn&& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

void row(const char* name, double serial_ms, double parallel_ms) {
  std::printf("%-28s %10.1f ms %10.1f ms %8.2fx\n", name, serial_ms,
              parallel_ms, serial_ms / parallel_ms);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  int atoms = 20;
  int scan_points = 64;
  double h = 0.004;
  app.add_option("--atoms", atoms, "atoms in the Gram benchmark");
  app.add_option("--scan", scan_points, "extra scan points per atom");
  app.add_option("--grid", h, "Riemann cell size");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads available: %d\n", max_threads());
  std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "parallel",
              "speedup");

  std::mt19937_64 rng(1);
  const PlaneMeasure mu = make_measure(atoms, rng);
  const SpaceSpec dirichlet = SpaceSpec::dirichlet();

  {
    std::vector<std::complex<double>> gs, gp;
    const double ts =
        time_ms([&] { gs = kernel_gram(dirichlet, mu, 1e-10, Exec::Serial); });
    const double tp = time_ms(
        [&] { gp = kernel_gram(dirichlet, mu, 1e-10, Exec::Parallel); });
    row("Gram assembly (quadrature)", ts, tp);
    if (gs != gp) std::printf("  MISMATCH between serial and parallel!\n");
  }

  {
    GridSpec scan = default_scan(mu);
    std::mt19937_64 rng2(2);
    std::uniform_real_distribution<double> re(0.05, 6.0), im(-4.0, 4.0);
    for (int i = 0; i < scan_points * atoms; ++i)
      scan.centres.push_back(HalfPlanePoint(re(rng2), im(rng2)));
    double vs = 0.0, vp = 0.0;
    const double ts = time_ms([&] {
      vs = kernel_sup_test(dirichlet, mu, scan, 1e-9, Exec::Serial).constant;
    });
    const double tp = time_ms([&] {
      vp = kernel_sup_test(dirichlet, mu, scan, 1e-9, Exec::Parallel).constant;
    });
    row("kernel-sup scan", ts, tp);
    if (vs != vp) std::printf("  MISMATCH between serial and parallel!\n");
  }

  {
    const HalfPlanePoint a(2.0, 0.0);
    auto rho = [](const HalfPlanePoint&) { return 1.0 / std::numbers::pi; };
    double vs = 0.0, vp = 0.0;
    const double ts = time_ms([&] {
      vs = square_intersection_integral_riemann(
          mu, a, IntersectionVariant::Tree, rho, h, Exec::Serial);
    });
    const double tp = time_ms([&] {
      vp = square_intersection_integral_riemann(
          mu, a, IntersectionVariant::Tree, rho, h, Exec::Parallel);
    });
    row("Riemann intersection oracle", ts, tp);
    if (vs != vp) std::printf("  MISMATCH between serial and parallel!\n");
  }
  return 0;
}
