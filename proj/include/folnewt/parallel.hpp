#pragma once

#include <cstddef>
#include <exception>
#include <vector>

namespace folnewt {

/// `serial` is the reference path kept for testing; `parallel` fans the same
/// independent jobs out over OpenMP threads. Results are identical.
enum class ExecPolicy { serial, parallel };

/// Thread cap: FOLNEWT_THREADS when set to a positive integer, else the
/// OpenMP default (1 without OpenMP).
int max_threads();

/// Calls body(i) for i in [0, n). Exceptions are captured per index and the
/// lowest-index one is rethrown after all jobs finish.
template <class Body>
void parallel_for(std::size_t n, ExecPolicy policy, Body&& body) {
  std::vector<std::exception_ptr> errors(n);
  const long count = static_cast<long>(n);
#ifdef FOLNEWT_HAVE_OPENMP
  const int threads = policy == ExecPolicy::parallel ? max_threads() : 1;
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads > 1 && count > 1)
#else
  (void)policy;
#endif
  for (long i = 0; i < count; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace folnewt
