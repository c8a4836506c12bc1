#ifndef LEONOMA_PARALLEL_HPP
#define LEONOMA_PARALLEL_HPP

#include <cstddef>
#include <thread>
#include <vector>

namespace leonoma {

// Runs fn(index) for index in [0, count) across a fixed-size thread pool.
// Work is striped by index so the assignment is deterministic; callers
// reduce results in index order, which keeps outputs independent of the
// worker count.
template <class Fn>
void parallel_for(std::size_t count, int threads, Fn&& fn) {
  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  if (threads == 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = static_cast<std::size_t>(t); i < count; i += threads) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace leonoma

#endif
