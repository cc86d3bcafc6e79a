#ifndef JJRB_PARALLEL_HPP
#define JJRB_PARALLEL_HPP

#include <cstddef>
#include <cstdlib>
#include <thread>
#include <vector>

namespace jjrb {

/// Thread budget: min(hardware, JJRB_THREADS if set). At most one thread per
/// task; never less than 1.
inline std::size_t thread_budget(std::size_t tasks) {
  std::size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("JJRB_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<std::size_t>(cap) < n) n = static_cast<std::size_t>(cap);
  }
  return n < tasks ? (n == 0 ? 1 : n) : (tasks == 0 ? 1 : tasks);
}

/// Runs fn(i) for i in [0, count) on up to thread_budget(count) threads.
/// Tasks must be independent; results should be written to distinct slots of
/// a pre-sized container so the outcome is order-independent.
template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  std::size_t workers = thread_budget(count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([w, workers, count, &fn] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace jjrb

#endif
