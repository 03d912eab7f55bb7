#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace sobkern {

// Worker count: SOBKER_THREADS env var caps it, 0 or unset means auto.
int thread_count();

// Runs f(block) for block = 0..n_blocks-1 on the worker pool. Blocks are a
// fixed partition of the work, independent of the number of threads, so a
// caller that stores per-block results and reduces them in block order gets
// bit-identical totals for any thread count.
void parallel_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& f);

// Deterministic pairwise tree sum (reduction order depends only on length).
double pairwise_sum(std::span<const double> v);

} // namespace sobkern
