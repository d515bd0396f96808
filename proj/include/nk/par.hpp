#pragma once

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nk {

/// Thread cap: min(NICHOLS_KIT_THREADS, OpenMP default). 1 without OpenMP.
inline int max_threads() {
#ifdef _OPENMP
  int n = omp_get_max_threads();
  if (const char* env = std::getenv("NICHOLS_KIT_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < n) n = cap;
  }
  return n;
#else
  return 1;
#endif
}

}  // namespace nk
