#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hardyscope {

/// Thread cap: HARDYSCOPE_THREADS if set, else hardware concurrency.
inline unsigned max_threads() {
  if (const char* env = std::getenv("HARDYSCOPE_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Runs fn(batch_index) for batch_index in [0, n_batches). Work is handed to
/// a pool of threads through an atomic counter; results land in a vector
/// indexed by batch so any reduction done afterwards in index order is
/// independent of the thread count and scheduling.
template <typename Result>
std::vector<Result> run_batches(std::size_t n_batches,
                                const std::function<Result(std::size_t)>& fn,
                                unsigned thread_cap = 0) {
  std::vector<Result> results(n_batches);
  if (n_batches == 0) return results;
  unsigned n_threads = thread_cap ? thread_cap : max_threads();
  if (n_threads > n_batches) n_threads = static_cast<unsigned>(n_batches);

  if (n_threads <= 1) {
    for (std::size_t i = 0; i < n_batches; ++i) results[i] = fn(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n_batches) return;
      results[i] = fn(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace hardyscope
