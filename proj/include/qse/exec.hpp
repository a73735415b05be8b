#ifndef QSE_EXEC_HPP
#define QSE_EXEC_HPP

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qse {

/// Execution policy for the data-parallel evaluators. Serial is the
/// reference path the tests compare against; Parallel uses OpenMP when
/// compiled in and degrades to serial otherwise. Both orders are
/// per-element independent, so the results are bitwise identical.
enum class Exec { Serial, Parallel };

template <class F>
void parallel_for(std::ptrdiff_t n, Exec exec, F&& body) {
#ifdef _OPENMP
  if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    return;
  }
#else
  (void)exec;
#endif
  for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
}

}  // namespace qse

#endif
