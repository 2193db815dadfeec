#ifndef BOREL_PARALLEL_HPP
#define BOREL_PARALLEL_HPP

#include <atomic>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace borel {

/// Worker count for per-vertex computations, from the BOREL_WORKERS
/// environment variable (default 1, capped at the hardware concurrency).
inline unsigned worker_count() {
  const char* env = std::getenv("BOREL_WORKERS");
  if (!env) return 1;
  long v = std::strtol(env, nullptr, 10);
  if (v < 1) return 1;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  return static_cast<unsigned>(v) > hw ? hw : static_cast<unsigned>(v);
}

/// Runs fn(i) for i in [0, count); results must be written into per-index
/// slots so the merge stays deterministic regardless of scheduling.
template <typename Fn>
void parallel_for_index(std::size_t count, Fn&& fn) {
  unsigned workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace borel

#endif
