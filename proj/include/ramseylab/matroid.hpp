#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ramseylab/graph.hpp"

namespace ramseylab {

/// Independence oracle over the edge set of a fixed host graph.
class IndependenceOracle {
  public:
    explicit IndependenceOracle(const Graph& host) : host_(&host) {}
    virtual ~IndependenceOracle() = default;
    const Graph& host() const { return *host_; }
    virtual bool independent(const EdgeSet& s) const = 0;
    virtual std::string kind() const = 0;

  private:
    const Graph* host_;
};

/// Graphic matroid: independent sets are the acyclic edge sets.
class GraphicOracle : public IndependenceOracle {
  public:
    using IndependenceOracle::IndependenceOracle;
    bool independent(const EdgeSet& s) const override;
    std::string kind() const override { return "graphic"; }
};

/// Sparsity matroid for a positive integer k: independent sets are the edge
/// sets K with m2(K) <= k, i.e. e_J <= k(v_J - 2) + 1 for every nonempty
/// J <= K. Decided by the (k, 2k-1) pebble game.
class SparsityOracle : public IndependenceOracle {
  public:
    SparsityOracle(const Graph& host, int k);
    bool independent(const EdgeSet& s) const override;
    std::string kind() const override { return "sparsity(" + std::to_string(k_) + ")"; }
    int k() const { return k_; }

  private:
    int k_;
};

bool graphic_independent(const Graph& g, const EdgeSet& s);
/// Rank of the graphic matroid: v_S - omega_S over incident vertices.
int graphic_rank(const Graph& g, const EdgeSet& s);
bool sparsity_independent(const Graph& g, const EdgeSet& s, int k);

/// Greedy rank through the oracle, scanning edges in index order.
int matroid_rank(const IndependenceOracle& oracle, const EdgeSet& s);

/// Either a full partition into per-matroid independent parts, or a
/// certificate X with sum_i r_i(X) < |X| proving none exists. Both outcomes
/// are re-verified against the oracles before being returned.
struct PartitionOutcome {
    bool success;
    std::vector<EdgeSet> parts;
    EdgeSet certificate;
};

/// Partitions `ground` (default: all edges) among the given matroids by
/// augmenting-path search over the exchange digraph (breadth-first,
/// edge-index tie-breaking).
PartitionOutcome matroid_partition(const Graph& g,
                                   const std::vector<const IndependenceOracle*>& oracles,
                                   const EdgeSet* ground = nullptr);

PartitionOutcome matroid_partition2(const Graph& g, const IndependenceOracle& o1,
                                    const IndependenceOracle& o2);

/// Exactly ceil(m1(G)) pairwise-disjoint forests covering E(G).
std::vector<EdgeSet> nash_williams(const Graph& g);

/// k disjoint pseudoforests (max density <= 1 each) covering E(G); requires
/// m(G) <= k, else InfeasibleError carrying a witness with e/v > k.
std::vector<EdgeSet> hakimi_pseudoforests(const Graph& g, int k);

/// Subgraph J' with m2(J') <= k and e_G <= e_{J'} + v_G - 1, built from the
/// first k-1 pseudoforest classes plus one edge of the k-th.
EdgeSet sparse_witness(const Graph& g, int k);

}  // namespace ramseylab
