#include "polilab/core/parallel.hpp"

#include <atomic>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace polilab {

namespace {
std::atomic<bool> g_parallel{true};
}

void set_parallel(bool on) { g_parallel.store(on); }

bool parallel_on() {
#if defined(_OPENMP)
  return g_parallel.load();
#else
  return false;
#endif
}

int worker_count() {
#if defined(_OPENMP)
  return parallel_on() ? omp_get_max_threads() : 1;
#else
  return 1;
#endif
}

}  // namespace polilab
