#include "mlc/parallel.hpp"

#include <cstdlib>
#include <string>

namespace mlc {

namespace {
std::atomic<std::size_t> g_threads{0};
}

std::size_t default_thread_count() {
  if (const char* env = std::getenv("MLC_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::size_t thread_count() {
  const std::size_t t = g_threads.load(std::memory_order_relaxed);
  return t == 0 ? default_thread_count() : t;
}

void set_thread_count(std::size_t n) { g_threads.store(n, std::memory_order_relaxed); }

}  // namespace mlc
