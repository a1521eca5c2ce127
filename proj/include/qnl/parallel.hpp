#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>

namespace qnl {

/// Worker count: QNL_THREADS when set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_count();

/// Runs task(i) for every i in [0, count). Tasks are claimed dynamically by
/// up to thread_count() workers; callers must make results independent of
/// the claim order. An exception thrown by any task is rethrown after all
/// workers have joined.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

/// SplitMix64 finalizer; used to derive per-instance seeds from a base seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace qnl
