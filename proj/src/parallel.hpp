#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace ripsrecon::detail {

inline unsigned worker_count() {
  if (const char* env = std::getenv("RIPSRECON_THREADS")) {
    const long v = std::atol(env);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

/// Runs f(i) for i in [0, n). Results must be written to disjoint, indexed
/// slots so the output is independent of scheduling.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  const unsigned workers = worker_count();
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto run = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      f(i);
    }
  };
  std::vector<std::thread> pool;
  const unsigned spawn = static_cast<unsigned>(
      std::min<std::size_t>(workers, n));
  pool.reserve(spawn);
  for (unsigned t = 1; t < spawn; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

} // namespace ripsrecon::detail
