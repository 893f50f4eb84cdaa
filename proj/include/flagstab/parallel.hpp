#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

// Deterministic index-space parallelism: parallel_for runs body(i) for every
// i < n on a bounded worker pool. Callers own all output slots by index, so
// results never depend on the worker count.

namespace flagstab {

namespace detail {

inline int default_parallelism() {
  if (const char* env = std::getenv("FLAGSTAB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? static_cast<int>(hw) : 1;
}

inline std::atomic<int>& parallelism_slot() {
  static std::atomic<int> slot{0};  // 0 means "use the default"
  return slot;
}

}  // namespace detail

inline int parallelism() {
  const int n = detail::parallelism_slot().load();
  return n >= 1 ? n : detail::default_parallelism();
}

// n <= 0 restores the environment-driven default.
inline void set_parallelism(int n) {
  detail::parallelism_slot().store(n >= 1 ? n : 0);
}

template <class Body>
void parallel_for(std::size_t n, Body&& body) {
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(parallelism()), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr first_error;
  std::mutex error_lock;
  auto run = [&] {
    while (!failed.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> hold(error_lock);
        if (!first_error) first_error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run);
  for (std::thread& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace flagstab
