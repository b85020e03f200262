#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace excmono {

// EXCMONO_THREADS if set (>= 1), otherwise the hardware concurrency.
inline int worker_count() {
  if (const char* env = std::getenv("EXCMONO_THREADS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

// Splits [0, n) into contiguous chunks, one per worker; fn(begin, end, worker).
// Callers reduce per-worker results in worker order, so output does not
// depend on scheduling.
template <class Fn>
void parallel_chunks(std::size_t n, int workers, Fn fn) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(std::max<std::size_t>(n, 1))));
  if (workers == 1) {
    fn(std::size_t{0}, n, 0);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t step = (n + static_cast<std::size_t>(workers) - 1) / static_cast<std::size_t>(workers);
  for (int w = 0; w < workers; ++w) {
    const std::size_t b = std::min(n, step * static_cast<std::size_t>(w));
    const std::size_t e = std::min(n, b + step);
    pool.emplace_back([=, &fn] { fn(b, e, w); });
  }
  for (auto& t : pool) t.join();
}

}  // namespace excmono
