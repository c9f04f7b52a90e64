#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace scatcm {

/// Resolve a requested worker count; 0 means hardware concurrency.
inline unsigned worker_count(unsigned requested, std::size_t tasks) {
  unsigned n = requested != 0 ? requested : std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (tasks < n) n = static_cast<unsigned>(tasks == 0 ? 1 : tasks);
  return n;
}

/// Run body(i) for i in [0, n) on a bounded pool. Every index is attempted;
/// afterwards the exception from the lowest failing index is rethrown along
/// with that index through `on_error` (if given) or as-is.
inline void parallel_for(
    std::size_t n, unsigned threads,
    const std::function<void(std::size_t)>& body,
    const std::function<void(std::size_t, std::exception_ptr)>& on_error = {}) {
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::size_t failed_index = n;
  std::exception_ptr failure;

  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (i < failed_index) {
          failed_index = i;
          failure = std::current_exception();
        }
      }
    }
  };

  const unsigned count = worker_count(threads, n);
  if (count <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  if (failure) {
    if (on_error) on_error(failed_index, failure);
    std::rethrow_exception(failure);
  }
}

}  // namespace scatcm
