#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace implinet::detail {

/// Runs fn(i) for i in [0, n) across up to `threads` workers using a
/// static partition. Callers must write results into preallocated
/// per-index slots; with that discipline the outcome is independent of
/// the worker count.
template <typename Fn>
void parallel_for(std::size_t n, unsigned threads, Fn&& fn) {
  if (threads <= 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  const std::size_t workers = std::min<std::size_t>(threads, n);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([n, w, workers, &fn] {
      const std::size_t lo = n * w / workers;
      const std::size_t hi = n * (w + 1) / workers;
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace implinet::detail
