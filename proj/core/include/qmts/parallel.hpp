#pragma once

#include <cstdlib>
#include <thread>
#include <vector>

namespace qmts {

/// Worker count for sweeps: min(hardware_concurrency, QMTS_THREADS if set).
inline unsigned parallel_workers() {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("QMTS_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned>(cap) < n) n = static_cast<unsigned>(cap);
  }
  return n;
}

/// Runs fn(i) for i in [0, n). Results must be written to index-addressed
/// storage by the caller; chunking is static so the output is deterministic.
template <typename Fn>
void parallel_for(std::size_t n, Fn&& fn, std::size_t serial_threshold = 64) {
  unsigned workers = parallel_workers();
  if (n <= serial_threshold || workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t lo = w * chunk;
    std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::size_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace qmts
