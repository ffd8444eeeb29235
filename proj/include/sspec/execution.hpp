#pragma once

#include <cstddef>
#include <exception>
#include <mutex>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sspec {

// Kernels that loop over independent simplices or jobs come in two flavours:
// a plain serial loop (the reference) and an OpenMP loop.
enum class Execution { serial, parallel };

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Runs body(i) for i in [0, n). Exceptions thrown by body are captured and the
// first one is rethrown on the calling thread after the loop.
template <typename Body>
void for_each_index(std::ptrdiff_t n, Execution exec, Body&& body) {
  if (exec == Execution::serial || n < 2) {
    for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
#pragma omp parallel for schedule(dynamic, 8)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace sspec
