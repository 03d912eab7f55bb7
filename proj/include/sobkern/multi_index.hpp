#pragma once

#include <cstdint>
#include <vector>

namespace sobkern {

// All multi-indices alpha in N_0^d with |alpha|_1 <= s, in lexicographic
// order starting from alpha = 0. Stored flat, row-major (size() * d entries).
struct MultiIndexSet {
    int d = 0;
    int s = 0;
    std::vector<int> flat;
    std::size_t size() const { return d == 0 ? 0 : flat.size() / static_cast<std::size_t>(d); }
    const int* alpha(std::size_t i) const { return flat.data() + i * static_cast<std::size_t>(d); }
};

// Cached per (d, s). Thread-safe.
const MultiIndexSet& multi_indices(int d, int s);

std::uint64_t binomial(int n, int k);

} // namespace sobkern
