#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace kronhwv {

/// Process-wide worker count for parallel loops; 1 runs everything inline.
inline std::atomic<int>& thread_count() {
  static std::atomic<int> n{1};
  return n;
}

/// Calls fn(i) for i in [0, n) on up to thread_count() workers. Work is handed
/// out by an atomic counter; callers write results into slot i, which keeps the
/// output independent of scheduling. The first exception is rethrown.
inline void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const auto workers =
      static_cast<std::size_t>(std::max(1, std::min<int>(thread_count().load(), static_cast<int>(n))));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          next = n;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace kronhwv
