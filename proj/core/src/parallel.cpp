#include "operlab/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace operlab {

unsigned worker_count(unsigned override_threads) {
  if (override_threads > 0) return std::min(override_threads, 64u);
  if (const char* env = std::getenv("OPERLAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return std::min<unsigned>((unsigned)v, 64u);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return std::clamp(hw, 1u, 8u);
}

}  // namespace operlab
