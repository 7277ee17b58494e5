#include "ramseylab/gnp.hpp"

#include <cmath>

#include "ramseylab/rng.hpp"

namespace ramseylab {

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0) throw DomainError("negative vertex count");
    if (p < 0.0 || p > 1.0 || std::isnan(p)) throw DomainError("p must be in [0,1]");
    std::vector<std::pair<int, int>> edges;
    if (p > 0.0) {
        // One draw per pair in canonical order; include iff draw < p * 2^64.
        // p = 1 short-circuits so the threshold never overflows.
        const long double scale = 18446744073709551616.0L;  // 2^64
        const long double thr = static_cast<long double>(p) * scale;
        std::uint64_t state = seed;
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                std::uint64_t draw = splitmix64(state);
                if (p >= 1.0 || static_cast<long double>(draw) < thr)
                    edges.emplace_back(u, v);
            }
        }
    }
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace ramseylab
