#pragma once

#include <vector>

#include "ramseylab/graph.hpp"

namespace ramseylab {

bool is_connected(const Graph& g);
bool is_acyclic(const Graph& g);

/// Exact isomorphism test (equal vertex counts required for true).
bool are_isomorphic(const Graph& a, const Graph& b);

/// All simple graphs on exactly n vertices, one per isomorphism class, in a
/// deterministic order (by edge count, then graph6 string). Practical for
/// n <= 8; results are cached per n.
const std::vector<Graph>& all_graphs(int n);

/// Isomorphism-class representatives with 1..n vertices (optionally only the
/// connected ones), in the same deterministic order per size.
std::vector<Graph> graphs_up_to(int n, bool connected_only);

}  // namespace ramseylab
