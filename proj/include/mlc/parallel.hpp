#pragma once

// Index-space scans split across worker threads. Results never depend on the
// worker count: searches return the smallest matching index.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

namespace mlc {

/// MLC_THREADS if set and positive, else the hardware concurrency.
std::size_t default_thread_count();
std::size_t thread_count();
/// 0 restores the default.
void set_thread_count(std::size_t n);

/// Smallest i in [0, total) with pred(i), or nullopt.
template <class Pred>
std::optional<std::uint64_t> parallel_find_first(std::uint64_t total, Pred&& pred) {
  const std::size_t workers = std::min<std::uint64_t>(thread_count(), total == 0 ? 1 : total);
  if (workers <= 1 || total < 4096) {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  const std::uint64_t chunk = std::max<std::uint64_t>(1024, total / (workers * 64));
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{total};
  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      const std::uint64_t begin = c * chunk;
      if (begin >= best.load(std::memory_order_relaxed)) return;
      const std::uint64_t end = std::min(total, begin + chunk);
      for (std::uint64_t i = begin; i < end; ++i) {
        if (pred(i)) {
          std::uint64_t cur = best.load(std::memory_order_relaxed);
          while (i < cur && !best.compare_exchange_weak(cur, i)) {
          }
          break;
        }
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  const std::uint64_t found = best.load();
  if (found == total) return std::nullopt;
  return found;
}

/// body(begin, end) over disjoint chunks covering [0, total), in any order.
template <class Body>
void parallel_for_chunks(std::uint64_t total, Body&& body) {
  const std::size_t workers = std::min<std::uint64_t>(thread_count(), total == 0 ? 1 : total);
  if (workers <= 1 || total < 4096) {
    body(std::uint64_t{0}, total);
    return;
  }
  const std::uint64_t chunk = std::max<std::uint64_t>(1024, total / (workers * 16));
  const std::uint64_t chunks = (total + chunk - 1) / chunk;
  std::atomic<std::uint64_t> next{0};
  auto work = [&] {
    for (;;) {
      const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) return;
      body(c * chunk, std::min(total, (c + 1) * chunk));
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 0; t + 1 < workers; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace mlc
