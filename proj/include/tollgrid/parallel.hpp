#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace tollgrid {

/// Worker-thread cap: TOLLGRID_THREADS env var; 0 or unset means the
/// hardware count.  Always at least 1.
inline unsigned thread_budget() {
  unsigned n = 0;
  if (const char* env = std::getenv("TOLLGRID_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) n = static_cast<unsigned>(v);
  }
  if (n == 0) n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : n;
}

/// Runs fn(i) for i in [0, n).  Each index owns its own state and output
/// slot, so results are index-deterministic regardless of scheduling.
/// The first exception, if any, is rethrown on the calling thread.
template <class F>
void parallel_for_index(int n, F&& fn) {
  if (n <= 0) return;
  const unsigned budget = thread_budget();
  if (budget == 1 || n == 1) {
    for (int i = 0; i < n; ++i) fn(i);
    return;
  }
  const unsigned workers = budget < static_cast<unsigned>(n) ? budget : static_cast<unsigned>(n);
  std::atomic<int> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const int i = next.fetch_add(1);
        if (i >= n || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load() && first_error) std::rethrow_exception(first_error);
}

}  // namespace tollgrid
