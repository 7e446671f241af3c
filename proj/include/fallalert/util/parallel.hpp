#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace fallalert {

inline int worker_count() {
  if (const char* env = std::getenv("FALLALERT_WORKERS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 4 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n). Work items must be independent; results are
// written by index so reductions stay deterministic regardless of scheduling.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn, int workers = 0) {
  if (workers <= 0) workers = worker_count();
  if (n == 0) return;
  if (workers == 1 || n == 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr first_error;
  std::mutex err_mutex;
  auto body = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= n) break;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  int spawn = static_cast<int>(std::min<size_t>(static_cast<size_t>(workers), n));
  pool.reserve(static_cast<size_t>(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fallalert
