#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace mrt {

/// Resolve a user-supplied thread count; 0 means "use the hardware".
inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

/// Static-partition parallel loop over [begin, end). Each index is processed
/// exactly once by exactly one thread, so any computation whose per-index
/// result does not depend on the partition yields bit-identical output for
/// every thread count.
template <typename Fn>
void parallel_for(std::int64_t begin, std::int64_t end, int threads, Fn&& fn) {
  const std::int64_t n = end - begin;
  if (n <= 0) return;
  const int nt = std::min<std::int64_t>(resolve_threads(threads), n);
  if (nt <= 1) {
    for (std::int64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(nt);
  const std::int64_t chunk = (n + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    const std::int64_t lo = begin + t * chunk;
    const std::int64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::int64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace mrt
