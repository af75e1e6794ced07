#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace osn {

inline int resolve_threads(int requested) {
  if (requested > 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Static partition of [0, n) into contiguous chunks, one per worker. Each
// output slot is written by exactly one worker, so results do not depend on
// the thread count.
template <typename Fn>
void parallel_for(std::size_t n, int threads, Fn&& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || n < 2048) {
    fn(std::size_t{0}, n);
    return;
  }
  std::size_t nt = static_cast<std::size_t>(threads);
  if (nt > n) nt = n;
  std::vector<std::thread> pool;
  pool.reserve(nt);
  std::size_t chunk = (n + nt - 1) / nt;
  for (std::size_t t = 0; t < nt; ++t) {
    std::size_t lo = t * chunk;
    std::size_t hi = lo + chunk < n ? lo + chunk : n;
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] { fn(lo, hi); });
  }
  for (auto& th : pool) th.join();
}

}  // namespace osn
