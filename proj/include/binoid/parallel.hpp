#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace binoid {

/// Worker count: hardware concurrency capped by BINOID_HK_THREADS.
inline std::size_t thread_budget() {
  unsigned hw = std::thread::hardware_concurrency();
  std::size_t n = hw == 0 ? 1 : hw;
  if (const char* env = std::getenv("BINOID_HK_THREADS")) {
    long v = std::atol(env);
    if (v >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
  }
  return std::max<std::size_t>(1, n);
}

/// Runs fn(i) for i in [0, count) across the thread budget. Results must be
/// written to index-addressed slots so the merge stays deterministic.
template <typename Fn>
void parallel_for_index(std::size_t count, Fn fn) {
  const std::size_t workers = std::min(thread_budget(), count == 0 ? 1 : count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) break;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
}

}  // namespace binoid
