#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hermlab {

/// Runs fn(i) for i in [0, n) on up to `jobs` threads. Work is handed out in
/// chunks; the first exception thrown by any worker is rethrown.
template <class Fn>
void parallel_for(std::size_t n, unsigned jobs, Fn&& fn, std::size_t chunk = 64) {
  if (jobs <= 1 || n <= chunk) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  auto worker = [&] {
    try {
      for (;;) {
        const std::size_t start = next.fetch_add(chunk);
        if (start >= n) return;
        const std::size_t stop = std::min(n, start + chunk);
        for (std::size_t i = start; i < stop; ++i) fn(i);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(err_mu);
      if (!err) err = std::current_exception();
      next.store(n);
    }
  };
  std::vector<std::thread> pool;
  const unsigned k = std::min<unsigned>(jobs, static_cast<unsigned>((n + chunk - 1) / chunk));
  for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace hermlab
