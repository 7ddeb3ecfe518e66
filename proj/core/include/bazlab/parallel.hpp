#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace bazlab {

/// Worker cap: BAZLAB_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t worker_count();

/// Runs body(i) for i in [0, count) across up to worker_count() threads.
/// Callers write results into per-index slots, so the merged output does not
/// depend on scheduling. The first exception thrown by any body is rethrown.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// splitmix64 mix of (seed, stream); used to give every trial its own seed.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace bazlab
