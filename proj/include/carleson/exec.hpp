#pragma once

#include <cstddef>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace carleson {

// Execution policy for the data-parallel kernels (grid scans, Gram assembly,
// Riemann sums).  Serial is the reference path; Parallel uses OpenMP when the
// build has it and degrades to the serial path otherwise.  Both paths produce
// bit-identical results: parallel loops only write disjoint slots, and sums
// are accumulated over a fixed block partition in index order.
enum class Exec { Serial, Parallel };

inline int max_threads() {
#if defined(_OPENMP)
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Evaluates fn(i) for i in [0, n) into a vector.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, Fn&& fn, Exec exec) {
  std::vector<T> out(n);
  if (exec == Exec::Parallel) {
#if defined(_OPENMP)
#pragma omp parallel for schedule(dynamic)
#endif
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  } else {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  }
  return out;
}

// Deterministic blocked reduction: block_fn(b) must return the (serially
// computed) sum over block b.  Blocks are evaluated in parallel and combined
// in index order, so the result does not depend on the thread count.
template <class T, class BlockFn>
T blocked_sum(std::size_t n_blocks, BlockFn&& block_fn, Exec exec) {
  std::vector<T> partial = parallel_map<T>(n_blocks, block_fn, exec);
  T total{};
  for (const T& v : partial) total += v;
  return total;
}

}  // namespace carleson
