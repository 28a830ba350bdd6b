#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace polilab {

// Global switch for the OpenMP kernels. When off (or when the build has no
// OpenMP), every map runs the serial reference path. Batch results are
// bitwise identical either way: items are pure functions of their index and
// reductions always happen in index order after the map.
void set_parallel(bool on);
bool parallel_on();
int worker_count();

// Serial reference: plain loop in index order.
template <class R, class F>
std::vector<R> map_items_serial(std::size_t n, F&& fn) {
  std::vector<R> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
  return out;
}

// OpenMP kernel: each index writes only its own slot.
template <class R, class F>
std::vector<R> map_items_parallel(std::size_t n, F&& fn) {
  std::vector<R> out(n);
#if defined(_OPENMP)
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < static_cast<long long>(n); ++i)
    out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
#else
  for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
#endif
  return out;
}

template <class R, class F>
std::vector<R> map_items(std::size_t n, F&& fn) {
  if (parallel_on()) return map_items_parallel<R>(n, std::forward<F>(fn));
  return map_items_serial<R>(n, std::forward<F>(fn));
}

}  // namespace polilab
