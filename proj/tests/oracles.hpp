#pragma once

// Naive reference oracles for the density functionals: enumerate every
// nonempty edge subset and evaluate the defining ratio directly. These are
// deliberately independent of the library's subset-scan implementation and
// exist only to cross-check it.

#include <bit>
#include <cstdint>

#include "ramseylab/graph.hpp"
#include "ramseylab/rational.hpp"

namespace oracles {

using ramseylab::Graph;
using ramseylab::Rat;

struct SubsetStats {
    long long e;
    int v;  // incident vertices only
};

inline SubsetStats stats(const Graph& g, std::uint64_t edge_mask) {
    SubsetStats s{0, 0};
    std::uint64_t verts = 0;
    for (int i = 0; i < g.edge_count(); ++i) {
        if ((edge_mask >> i) & 1) {
            ++s.e;
            verts |= (1ULL << g.edges[i].first) | (1ULL << g.edges[i].second);
        }
    }
    s.v = std::popcount(verts);
    return s;
}

template <typename Fn>
void for_each_nonempty_subset(const Graph& g, Fn&& fn) {
    std::uint64_t total = 1ULL << g.edge_count();
    for (std::uint64_t m = 1; m < total; ++m) fn(stats(g, m));
}

inline Rat oracle_m(const Graph& g) {
    Rat best(0);  // a single vertex gives ratio 0
    for_each_nonempty_subset(g, [&](SubsetStats s) { best = std::max(best, Rat(s.e, s.v)); });
    return best;
}

inline Rat oracle_m1(const Graph& g) {
    Rat best(0);
    for_each_nonempty_subset(g, [&](SubsetStats s) {
        if (s.v >= 2) best = std::max(best, Rat(s.e, s.v - 1));
    });
    return best;
}

inline Rat oracle_m2(const Graph& g) {
    if (g.edge_count() == 0) return Rat(0);
    Rat best(0);
    for_each_nonempty_subset(g, [&](SubsetStats s) {
        Rat value = s.v >= 3 ? Rat(s.e - 1, s.v - 2) : Rat(1, 2);  // K2 convention
        best = std::max(best, value);
    });
    return best;
}

inline Rat oracle_mixed(const Graph& g, const Rat& m2_light) {
    Rat best(0);
    Rat inv = Rat(1) / m2_light;
    for_each_nonempty_subset(g, [&](SubsetStats s) {
        best = std::max(best, Rat(s.e) / (Rat(s.v - 2) + inv));
    });
    return best;
}

}  // namespace oracles
