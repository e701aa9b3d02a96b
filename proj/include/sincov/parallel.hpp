#pragma once

#include <cstddef>
#include <functional>

namespace sincov {

/// Worker count for library kernels: SINCOV_THREADS if set (0 = auto),
/// otherwise the hardware concurrency.
std::size_t thread_count();

/// Runs body(i) for i in [0, count). Chunks are contiguous and the call
/// returns after every index is done, so callers writing into per-index slots
/// get schedule-independent results. Runs inline when `count` is below
/// `min_parallel` or only one worker is available.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body,
                  std::size_t min_parallel = 2);

}  // namespace sincov
