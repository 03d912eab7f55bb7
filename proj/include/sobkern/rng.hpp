#pragma once

#include <cstdint>
#include <utility>

namespace sobkern {

// Counter-based stream: value(i) = splitmix64 finalizer applied to
// seed + (i+1) * 0x9E3779B97F4A7C15. Stateless, so any sample index can be
// produced on any thread and results are identical for every thread count.
// Gaussian variates come from Box–Muller on the uniform pair at counters
// (2k, 2k+1).
struct CounterRng {
    std::uint64_t seed = 0;

    std::uint64_t bits(std::uint64_t counter) const;
    // uniform in [0, 1)
    double uniform(std::uint64_t counter) const;
    // two independent N(0,1) variates from counters 2k and 2k+1
    std::pair<double, double> gaussian_pair(std::uint64_t pair_index) const;

    // Independent substream (used to decouple point sampling from the Monte
    // Carlo streams that consume the same seed).
    CounterRng substream(std::uint64_t tag) const;
};

} // namespace sobkern
