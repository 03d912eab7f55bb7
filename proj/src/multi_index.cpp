#include "sobkern/multi_index.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace sobkern {

namespace {

void gen(int d, int budget, std::vector<int>& cur, std::vector<int>& out) {
    if (static_cast<int>(cur.size()) == d) {
        out.insert(out.end(), cur.begin(), cur.end());
        return;
    }
    for (int a = 0; a <= budget; ++a) {
        cur.push_back(a);
        gen(d, budget - a, cur, out);
        cur.pop_back();
    }
}

} // namespace

const MultiIndexSet& multi_indices(int d, int s) {
    if (d < 1 || s < 0) throw std::domain_error("multi_indices: need d >= 1, s >= 0");
    static std::map<std::pair<int, int>, MultiIndexSet> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(d, s);
    auto it = cache.find(key);
    if (it == cache.end()) {
        MultiIndexSet set;
        set.d = d;
        set.s = s;
        std::vector<int> cur;
        gen(d, s, cur, set.flat);
        it = cache.emplace(key, std::move(set)).first;
    }
    return it->second;
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
    return r;
}

} // namespace sobkern
