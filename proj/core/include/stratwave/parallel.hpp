#pragma once

#include <atomic>
#include <thread>
#include <vector>

namespace stratwave {

// Chunked parallel loop over [0, n). All call sites pass pure per-index work.
template <typename F>
void parallel_for(int n, F&& f) {
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw <= 1 || n < 64) {
    for (int i = 0; i < n; ++i) f(i);
    return;
  }
  const int chunk = 16;
  std::atomic<int> next{0};
  auto worker = [&] {
    for (;;) {
      const int base = next.fetch_add(chunk);
      if (base >= n) return;
      const int end = std::min(base + chunk, n);
      for (int i = base; i < end; ++i) f(i);
    }
  };
  std::vector<std::thread> pool;
  const unsigned nt = std::min(hw, 16u);
  pool.reserve(nt - 1);
  for (unsigned t = 1; t < nt; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

}  // namespace stratwave
