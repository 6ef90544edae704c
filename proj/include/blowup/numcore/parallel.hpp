#pragma once

#include <functional>

namespace blowup::numcore {

/// Thread cap: min(hardware, BLOWUP_THREADS) when the environment variable is
/// set, otherwise hardware concurrency (at most 8).
int thread_limit();

/// Runs fn(0..count-1), possibly concurrently. Results must be written into
/// caller-owned slots indexed by i, which keeps every reduction
/// deterministic. A global token budget prevents oversubscription when
/// orchestration layers nest.
void parallel_for_index(int count, const std::function<void(int)>& fn);

}  // namespace blowup::numcore
