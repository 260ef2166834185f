#include "idealkit/execution.hpp"

#include <omp.h>

#include <cstdlib>
#include <string>

namespace idealkit {

int thread_cap() {
  if (const char* env = std::getenv("IDEALKIT_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n > 0) return n;
    } catch (const std::exception&) {
      // malformed value: fall back to auto
    }
  }
  return omp_get_max_threads();
}

}  // namespace idealkit
