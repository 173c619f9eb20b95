#pragma once

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace plab {

inline int default_workers() {
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs fn(block_index) for block_index in [0, num_blocks) across workers and
// returns the results in block order. Blocks own their random streams, so the
// outcome does not depend on the worker count or scheduling.
template <class R>
std::vector<R> run_blocks(std::size_t num_blocks, int workers,
                          const std::function<R(std::size_t)>& fn) {
  std::vector<R> results(num_blocks);
  if (workers <= 1 || num_blocks <= 1) {
    for (std::size_t b = 0; b < num_blocks; ++b) results[b] = fn(b);
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= num_blocks) return;
      results[b] = fn(b);
    }
  };
  std::vector<std::thread> pool;
  const int count = std::min<std::size_t>(workers, num_blocks);
  pool.reserve(count);
  for (int t = 0; t < count; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace plab
