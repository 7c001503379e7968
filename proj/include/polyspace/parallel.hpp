#pragma once

#include <cstdint>
#include <functional>

namespace polyspace {

/// Worker cap: min(POLYSPACE_THREADS, hardware concurrency), at least 1.
int worker_count();

/// Splits [begin, end) into one contiguous chunk per worker and runs
/// body(worker_id, lo, hi) on each, joining before returning. Callers must
/// make their reductions order-independent so results do not depend on the
/// worker count.
void parallel_chunks(std::uint64_t begin, std::uint64_t end,
                     const std::function<void(int, std::uint64_t, std::uint64_t)>& body);

}  // namespace polyspace
