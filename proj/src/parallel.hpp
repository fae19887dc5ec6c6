#pragma once

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace ndm::detail {

/// Runs body(i) for i in [0, count) on up to `threads` workers, strided so each
/// worker sees every threads-th index.
inline void parallel_for(size_t count, int threads, const std::function<void(size_t)>& body) {
  const size_t workers = std::min<size_t>(static_cast<size_t>(std::max(threads, 1)), count);
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  for (size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (size_t i = w; i < count; i += workers) body(i);
    });
  for (auto& t : pool) t.join();
}

/// Smallest i in [0, count) with pred(i), or count if none. Deterministic for any thread count.
inline size_t parallel_first(size_t count, int threads, const std::function<bool(size_t)>& pred) {
  std::atomic<size_t> best{count};
  parallel_for(count, threads, [&](size_t i) {
    if (i >= best.load()) return;
    if (pred(i)) {
      size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  });
  return best.load();
}

}  // namespace ndm::detail
