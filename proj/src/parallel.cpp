#include "polyspace/parallel.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace polyspace {

int worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  int count = hw == 0 ? 1 : static_cast<int>(hw);
  if (const char* env = std::getenv("POLYSPACE_THREADS")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end != env && cap > 0) count = std::min<long>(count, cap);
  }
  return std::max(count, 1);
}

void parallel_chunks(std::uint64_t begin, std::uint64_t end,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& body) {
  const std::uint64_t size = end > begin ? end - begin : 0;
  if (size == 0) return;
  const int workers = static_cast<int>(
      std::min<std::uint64_t>(static_cast<std::uint64_t>(worker_count()), size));
  if (workers <= 1) {
    body(0, begin, end);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  const std::uint64_t chunk = size / workers;
  const std::uint64_t extra = size % workers;
  std::uint64_t lo = begin;
  for (int w = 0; w < workers; ++w) {
    std::uint64_t hi = lo + chunk + (static_cast<std::uint64_t>(w) < extra ? 1 : 0);
    pool.emplace_back(body, w, lo, hi);
    lo = hi;
  }
  for (auto& t : pool) t.join();
}

}  // namespace polyspace
