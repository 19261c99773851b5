#pragma once

#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace stableplace {

// Effective worker count: STABLEPLACE_THREADS wins over the configured value,
// which wins over the serial default.
inline unsigned resolve_threads(unsigned requested) {
  if (const char* env = std::getenv("STABLEPLACE_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  if (requested > 0) return requested;
  return 1;
}

// Runs fn(i) for i in [0, n). Work items must be independent; callers get
// deterministic output by writing to slot i of a pre-sized buffer.
inline void parallel_for(std::size_t n, unsigned threads,
                         const std::function<void(std::size_t)>& fn) {
  threads = resolve_threads(threads);
  if (threads <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      fn(i);
    }
  };
  const unsigned count =
      static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> pool;
  pool.reserve(count);
  for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace stableplace
