#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace papnlab {

/// Worker count: PAPNLAB_JOBS if set and positive, otherwise the hardware
/// concurrency (at least 1).
inline unsigned default_jobs() {
  if (const char* env = std::getenv("PAPNLAB_JOBS")) {
    try {
      const int v = std::stoi(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Runs fn(begin, end) over contiguous chunks of [0, count). Chunk boundaries
/// depend only on count and jobs, and callers write results by index, so the
/// merged output is independent of scheduling.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned jobs, Fn&& fn) {
  if (count == 0) return;
  jobs = std::max(1u, jobs);
  const std::size_t workers = std::min<std::size_t>(jobs, count);
  if (workers == 1) {
    fn(std::size_t{0}, count);
    return;
  }
  const std::size_t step = (count + workers - 1) / workers;
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = w * step;
      const std::size_t hi = std::min(count, lo + step);
      if (lo >= hi) break;
      pool.emplace_back([&, lo, hi] {
        try {
          fn(lo, hi);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& fn) {
  parallel_chunks(count, jobs, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) fn(i);
  });
}

}  // namespace papnlab
