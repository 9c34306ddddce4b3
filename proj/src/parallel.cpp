#include "tropkit/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tropkit {

int thread_cap() {
  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif
  if (const char* env = std::getenv("TROPKIT_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap > 0 && cap < threads) threads = cap;
    } catch (const std::exception&) {
      // Unparseable values leave the default in place.
    }
  }
  return threads;
}

}  // namespace tropkit
