#include "folnewt/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef FOLNEWT_HAVE_OPENMP
#include <omp.h>
#endif

namespace folnewt {

int max_threads() {
  int fallback = 1;
#ifdef FOLNEWT_HAVE_OPENMP
  fallback = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("FOLNEWT_THREADS")) {
    try {
      int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // ignore malformed values
    }
  }
  return fallback;
}

}  // namespace folnewt
