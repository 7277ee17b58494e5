#pragma once

#include <optional>
#include <vector>

#include "ramseylab/graph.hpp"

namespace ramseylab {

/// All copies of `pattern` in `g`, as sorted edge-index vectors in
/// lexicographic order. A copy is the edge image of an embedding; two
/// embeddings with the same edge image are one copy.
std::vector<std::vector<int>> enumerate_copies(const Graph& g, const Graph& pattern);

/// First copy of `pattern` found inside the subgraph formed by `allowed`
/// (all of g when null). Early-exit decision version of enumerate_copies.
std::optional<std::vector<int>> find_copy(const Graph& g, const Graph& pattern,
                                          const EdgeSet* allowed = nullptr);

}  // namespace ramseylab
