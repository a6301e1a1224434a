#pragma once

#include <cstddef>
#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace drfwl {

/// Degree of parallelism for the data-parallel kernels. threads == 1 runs the
/// plain serial loop; results never depend on this value.
struct ExecPolicy {
  int threads = 1;

  static ExecPolicy serial() { return {1}; }
  static ExecPolicy hardware();
};

int hardware_threads();

/// Resolves the thread count: explicit value if > 0, else $DRFWL_THREADS,
/// else hardware concurrency.
int resolve_threads(int requested);

/// Runs body(i) for i in [0, n). Each index is visited exactly once; the
/// body must only write state owned by index i.
template <class Body>
void parallel_for(std::size_t n, const ExecPolicy& policy, Body&& body) {
#ifdef _OPENMP
  if (policy.threads > 1 && n > 1) {
    const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) num_threads(policy.threads)
    for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) body(i);
}

}  // namespace drfwl
