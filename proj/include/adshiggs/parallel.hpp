#pragma once

#include <cstddef>
#include <functional>

namespace adshiggs {

/// Thread cap: ADSHIGGS_THREADS when set (clamped to >= 1), otherwise
/// hardware concurrency.
int max_threads();

/// Runs fn(begin, end) over a partition of [0, n). Work items must be
/// independent; callers that reduce should write per-index results into a
/// preallocated buffer and sum sequentially afterwards, so results do not
/// depend on the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn,
                  int threads = 0);

}  // namespace adshiggs
