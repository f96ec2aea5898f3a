#pragma once

// Minimal fork-join helper. The worker count comes from BICOV_THREADS
// (default: hardware concurrency, at least 1).

#include <atomic>
#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace bicov {

int thread_count();

/// Runs f(i) for i in [0, count); results are written by index, so the
/// outcome does not depend on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F&& f) {
  std::vector<T> out(count);
  const std::size_t workers = std::min<std::size_t>(count, static_cast<std::size_t>(thread_count()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) out[i] = f(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace bicov
