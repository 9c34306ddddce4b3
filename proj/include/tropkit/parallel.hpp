#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tropkit {

/// Execution policy for the kernels that have both a serial reference path
/// and an OpenMP path. Both paths produce identical results.
enum class Exec { serial, parallel };

/// Thread count for parallel kernels: TROPKIT_THREADS when set to a positive
/// integer, else the OpenMP default.
int thread_cap();

/// Runs fn(i) for i in [0, n). The first exception thrown by any iteration is
/// rethrown on the calling thread after the loop.
template <class Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn) {
  if (exec == Exec::serial || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex guard;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic) num_threads(thread_cap())
  for (long i = 0; i < count; ++i) {
    try {
      fn(static_cast<std::size_t>(i));
    } catch (...) {
      std::lock_guard lock(guard);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace tropkit
