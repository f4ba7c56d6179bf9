#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace qlogic {

/// Worker count from QLOGIC_WORKERS, defaulting to 1.
inline unsigned workers_from_env() {
  if (const char* v = std::getenv("QLOGIC_WORKERS")) {
    try {
      const int w = std::stoi(v);
      if (w > 0) return static_cast<unsigned>(w);
    } catch (...) {
    }
  }
  return 1;
}

namespace detail {

/// Runs fn(i) for i in [0, count), striping indices over `workers` threads.
/// Callers write results into per-index slots, so output order never
/// depends on scheduling.
template <class Fn>
void parallel_for(std::size_t count, unsigned workers, Fn&& fn) {
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace detail
}  // namespace qlogic
