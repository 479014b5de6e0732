#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace outpost {

// Runs fn(i) for i in [0, count) on up to hardware_concurrency threads.
// Callers write results into slot i, so the outcome never depends on
// scheduling. The first exception thrown by any call is rethrown here.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  const int workers =
      std::min<int>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (int i = next++; i < count; i = next++) {
          try {
            fn(i);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
            next = count;
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace outpost
