#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace strengthlab::parallel {

inline int hardware_threads() {
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

inline constexpr std::size_t kNoCutoff = std::numeric_limits<std::size_t>::max();

/// Runs work(i) for i = 0, 1, ..., count-1, handing indices out in increasing
/// order to `threads` workers. Indices above `cutoff` (which work items may
/// lower while running) are never started. The first exception thrown by a
/// worker is rethrown after all workers have joined.
inline void run_indexed(std::size_t count, int threads, const std::atomic<std::size_t>& cutoff,
                        const std::function<void(std::size_t)>& work) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > cutoff.load() || failed.load()) return;
      try {
        work(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        failed = true;
        return;
      }
    }
  };
  const int n = std::max(1, std::min<int>(threads, static_cast<int>(std::min<std::size_t>(count, 1024))));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace strengthlab::parallel
