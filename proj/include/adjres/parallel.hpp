#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace adjres {

// Runs fn(i) for i in [0, n) on up to nthreads workers. Results must be
// written into per-index slots by the caller, which keeps output independent
// of scheduling; thread count only affects wall time.
inline void parallel_for_index(size_t n, int nthreads, const std::function<void(size_t)>& fn) {
  if (nthreads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mtx;
  auto worker = [&] {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard lk(error_mtx);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  size_t workers = std::min<size_t>(static_cast<size_t>(nthreads), n);
  std::vector<std::thread> pool;
  for (size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

inline int default_threads() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace adjres
