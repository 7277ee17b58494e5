#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramseylab/density.hpp"
#include "ramseylab/graph.hpp"

namespace ramseylab {

/// Two-coloring of a host's edges; red is the heavy-avoiding side, blue the
/// light-avoiding side. Parts partition E(host).
struct EdgeBipartition {
    EdgeSet red;
    EdgeSet blue;
    std::string strategy;
};

/// Greedy split along a degeneracy ordering: k vertex classes, each inducing
/// a (d-1)-degenerate graph. Requires G to be (dk-1)-degenerate.
std::vector<std::vector<int>> degenerate_vertex_partition(const Graph& g, int d, int k);

/// red = inside-class edges ((k-1)-degenerate), blue = cross edges
/// (bipartite). Requires m(G) < k.
EdgeBipartition split_bipartite_case(const Graph& g, int k);

/// blue = inside-class edges (a forest), red = cross edges (k-colorable).
/// Requires m(G) < k.
EdgeBipartition split_chromatic_case(const Graph& g, int k);

/// Nash-Williams split: with t = ceil(m1_heavy), red = t-1 forests
/// (1-density below m1_heavy), blue = the remaining two forests.
EdgeBipartition split_forest_case(const Graph& g, const Rat& m1_heavy);

/// Recursive forest / (s,t)-avoiding split. Fails only by returning the
/// remaining subgraph, which is then an (s+1,t+1)-graph.
struct StSplit {
    bool success;
    EdgeBipartition parts;   // blue = forest, red = (s,t)-avoiding
    EdgeSet certificate;     // an (s+1,t+1)-subgraph when !success
};
StSplit split_st_case(const Graph& g, int s, int t);

/// Matroid split: blue = spanning forest part, red = remainder with
/// m2(red) <= k. Requires m(G) <= k; the certificate branch is impossible
/// under that precondition and raises InternalError if ever reached.
EdgeBipartition split_integer_case(const Graph& g, long long k);

/// Exact chromatic number (branch and bound; intended for small graphs).
int chromatic_number(const Graph& g);

/// True iff no subgraph of `s` is an (s_param, t_param)-graph (minimum
/// degree >= s_param and every edge having an endpoint of degree >=
/// t_param). When false, `st_core` receives the peeled witness subgraph.
bool is_st_avoiding(const Graph& g, const EdgeSet& s, int s_param, int t_param,
                    EdgeSet* st_core = nullptr);

struct StrategyReport {
    Rat alpha;
    bool case_a, case_b, case_c, case_d, case_e;
    std::vector<int> chi_heavy, chi_light;    // exact chromatic numbers
    std::vector<Rat> m1_light;
    std::optional<std::pair<int, int>> st;    // smallest (s,t) certifying case d
    Rat ceil_alpha;
    Rat m2_heavy;
};

/// Which deterministic-lemma cases apply to the pair.
StrategyReport applicable_cases(const BalancedPair& pair);

struct ColoringCheck {
    bool ok;
    int color;                       // 0 = red violation, 1 = blue violation
    int member;                      // family member of the violating copy
    std::vector<int> violating_copy; // edge indices
};

/// True iff red holds no copy of any heavy member and blue no copy of any
/// light member.
ColoringCheck verify_coloring(const Graph& g, const EdgeBipartition& parts,
                              const BalancedPair& pair);

struct AntiRamseyOutcome {
    bool success;
    EdgeBipartition parts;
    std::string reason;  // set when no strategy applies
};

/// Tries the applicable cases cheapest-verified-first and returns the first
/// bipartition passing verify_coloring. Requires m(G) <= alpha.
AntiRamseyOutcome anti_ramsey_coloring(const Graph& g, const BalancedPair& pair);

struct ConjectureOutcome {
    bool found;
    EdgeSet forest;
    Rat target;         // m(G)
    Rat complement_m2;  // m2(G minus forest) when found
    long long forests_tried;
};

/// Searches for a forest F with m2(G \ F) <= m(G): the matroid construction
/// when m(G) is an integer, then a greedy witness-hitting forest, then
/// exhaustive search over maximal forests. `found == false` means every
/// maximal forest was exhausted.
ConjectureOutcome conjecture_search(const Graph& g, int edge_budget = 24);

}  // namespace ramseylab
