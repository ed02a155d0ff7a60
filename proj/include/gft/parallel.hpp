#pragma once

#include <cstddef>
#include <functional>

namespace gft {

/// Number of worker threads used by grid scans. Defaults to the hardware
/// concurrency. Results never depend on this value.
std::size_t worker_count();
void set_worker_count(std::size_t workers);  // 0 selects the hardware default

/// Splits [0, n) into contiguous chunks (aligned to `grain`) and runs
/// body(begin, end) on each, possibly concurrently. Returns once all chunks
/// completed; the first exception thrown by a chunk is rethrown.
void parallel_for(std::size_t n, std::size_t grain, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace gft
