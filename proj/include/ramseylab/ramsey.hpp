#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramseylab/density.hpp"
#include "ramseylab/graph.hpp"

namespace ramseylab {

/// Total edge coloring, aligned with the host's canonical edge order.
struct WitnessColoring {
    std::vector<int> colors;
};

struct RamseyResult {
    enum class Verdict { ramsey, not_ramsey, budget };
    Verdict verdict;
    WitnessColoring witness;  // meaningful iff verdict == not_ramsey
    long long nodes = 0;
    std::string note;
};

/// Exact decision: is every r-coloring of E(G) forced to contain a
/// monochromatic copy of some member of families[i] in color i?
/// Backtracking with unit propagation; node_budget < 0 means unlimited, and
/// exceeding a budget yields Verdict::budget, never a wrong answer.
RamseyResult ramsey_decide(const Graph& g, const std::vector<GraphFamily>& families,
                           long long node_budget = -1);

/// Same decision over explicit copy lists (two colors: red avoids f_h
/// members, blue avoids f_l members).
RamseyResult tuple_ramsey_decide(const Graph& g, const std::vector<EdgeSet>& f_h,
                                 const std::vector<EdgeSet>& f_l, long long node_budget = -1);

/// Portfolio race: the same instance under rotated branching orders, first
/// verified answer wins. The decision is identical regardless of the winning
/// worker; the witness is whichever the winner produced (verified).
RamseyResult ramsey_decide_portfolio(const Graph& g, const std::vector<GraphFamily>& families,
                                     int workers, long long node_budget = -1);

/// Deletes edges (ascending index) whose removal keeps the graph Ramsey,
/// until the graph is minimally Ramsey. Vertex set is preserved.
Graph minimal_ramsey_subgraph(const Graph& g, const std::vector<GraphFamily>& families,
                              long long node_budget = -1);

struct Copy {
    std::vector<int> edges;  // sorted edge indices in the host graph
    int member;              // family member index this copy embeds
};

/// Candidate (heavy, light)-core: a graph plus copy subfamilies.
struct CoreTuple {
    Graph g;
    std::vector<Copy> f_h;
    std::vector<Copy> f_l;
    GraphFamily heavy;
    GraphFamily light;
};

struct CoreCheck {
    bool ok;
    int failed_condition;  // 1: connectivity/span, 2: heavy partners, 3: light partners
    std::string detail;
};

/// Validates the three core conditions: the copy hypergraph is connected and
/// spans E(G); every heavy copy meets, at each of its edges, some light copy
/// in exactly that edge; and symmetrically.
CoreCheck is_core(const CoreTuple& core);

/// From a minimally Ramsey graph, drops copies greedily (largest first)
/// while the tuple stays Ramsey; the inclusion-minimal result is a core.
CoreTuple extract_core(const Graph& g, const BalancedPair& pair, long long node_budget = -1);

/// Merges a validated three-color core (G, F1, F2, F3) into the two-color
/// core (G, F1, F2 u F3). Empty F_j lists are treated as vacuous in the
/// precondition check (the degenerate identity merge).
CoreTuple merge_three_color_core(const Graph& g, const GraphFamily& h1, const GraphFamily& h2,
                                 const GraphFamily& h3, const std::vector<Copy>& f1,
                                 const std::vector<Copy>& f2, const std::vector<Copy>& f3);

/// Family copy enumeration used by the deciders: all copies of all members,
/// deduplicated, sorted lexicographically by edge-index set.
std::vector<Copy> family_copies(const Graph& g, const GraphFamily& family);

}  // namespace ramseylab
