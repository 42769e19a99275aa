#pragma once

#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace operlab {

// Worker count: explicit override > OPERLAB_THREADS > hardware concurrency.
unsigned worker_count(unsigned override_threads = 0);

// Applies fn to every index of [0, n) across workers.  Each index writes only
// its own slot, so results are identical for every thread count.
template <typename T>
std::vector<T> parallel_map(size_t n, const std::function<T(size_t)>& fn,
                            unsigned override_threads = 0) {
  std::vector<T> out(n);
  unsigned workers = worker_count(override_threads);
  if (workers <= 1 || n < 2 * workers) {
    for (size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (size_t i = w; i < n; i += workers) out[i] = fn(i);
    });
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace operlab
