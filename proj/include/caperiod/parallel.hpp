#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace caperiod {

inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Calls body(begin, end, worker) over [0, count) in dynamically claimed chunks.
// Reductions must be order independent; callers combine per-worker partials.
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned threads, std::uint64_t chunk, Body&& body) {
  threads = resolve_threads(threads);
  chunk = std::max<std::uint64_t>(chunk, 1);
  if (threads == 1 || count <= chunk) {
    for (std::uint64_t begin = 0; begin < count; begin += chunk)
      body(begin, std::min(count, begin + chunk), 0u);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::uint64_t begin = next.fetch_add(chunk);
          if (begin >= count) break;
          body(begin, std::min(count, begin + chunk), w);
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace caperiod
