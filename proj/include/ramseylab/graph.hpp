#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ramseylab/errors.hpp"

namespace ramseylab {

/// Simple labeled undirected graph. Vertices are 0..n-1; the edge list is
/// sorted lexicographically with u < v, and edge index i refers to the i-th
/// pair for the lifetime of the object. Immutable after construction.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    Graph() = default;

    /// Builds a graph from an edge list. Rejects loops, parallel edges and
    /// out-of-range endpoints; normalizes orientation and sorts.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> e);

    int vertex_count() const { return n; }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    /// Index of edge {u,v} in the canonical list, or -1.
    int edge_index(int u, int v) const;

    /// Per-vertex neighbor bitmasks; requires n <= 64.
    std::vector<std::uint64_t> adjacency_masks() const;

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

Graph make_complete(int k);
Graph make_cycle(int k);  // k >= 3
Graph make_path(int k);   // k vertices, k-1 edges
Graph make_biclique(int s, int t);
Graph make_complete_multipartite(const std::vector<int>& parts);

/// Parses "K5", "C8", "P4", "K3,3" (biclique), "K3,3,3,3" (complete
/// multipartite; >= 3 parts). Throws DomainError on anything else.
Graph make_named(const std::string& spec);

/// Subset of a fixed host graph's edges, identified by edge index. The host
/// is held by reference identity: using the set with any other Graph object
/// is a HostMismatchError. Value semantics; cheap to copy at desk scales.
class EdgeSet {
  public:
    EdgeSet() = default;
    explicit EdgeSet(const Graph& host) : host_(&host), words_((host.edge_count() + 63) / 64, 0) {}
    static EdgeSet full(const Graph& host);
    static EdgeSet of(const Graph& host, const std::vector<int>& indices);

    const Graph& host() const {
        if (!host_) throw HostMismatchError("EdgeSet has no host");
        return *host_;
    }
    bool same_host(const Graph& g) const { return host_ == &g; }
    void require_host(const Graph& g) const {
        if (host_ != &g) throw HostMismatchError("EdgeSet hosted by a different graph");
    }

    bool contains(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void add(int i) { check_index(i); words_[i >> 6] |= 1ULL << (i & 63); }
    void remove(int i) { check_index(i); words_[i >> 6] &= ~(1ULL << (i & 63)); }

    int size() const;
    bool empty() const;
    std::vector<int> indices() const;

    EdgeSet& operator|=(const EdgeSet& o);
    EdgeSet& operator&=(const EdgeSet& o);
    EdgeSet& subtract(const EdgeSet& o);
    EdgeSet complement() const;
    bool intersects(const EdgeSet& o) const;
    bool is_subset_of(const EdgeSet& o) const;
    bool operator==(const EdgeSet& o) const { return host_ == o.host_ && words_ == o.words_; }

    /// Single-word mask; requires the host to have at most 64 edges.
    std::uint64_t mask64() const;

    /// Vertices incident to at least one member edge, ascending.
    std::vector<int> incident_vertices() const;
    int incident_vertex_count() const;
    /// Connected components of the edge-induced subgraph (isolated vertices
    /// of the host do not count).
    int component_count() const;

  private:
    void check_index(int i) const {
        if (!host_ || i < 0 || i >= host_->edge_count())
            throw HostMismatchError("edge index out of range for host");
    }
    const Graph* host_ = nullptr;
    std::vector<std::uint64_t> words_;
};

/// Extracting the edge-induced subgraph relabels the incident vertices
/// canonically; `vertex_map[i]` is the host label of new vertex i.
struct Subgraph {
    Graph graph;
    std::vector<int> vertex_map;
};

Subgraph edge_subgraph(const Graph& g, const EdgeSet& s);

/// Nonempty list of pattern graphs; every member must have at least one edge.
struct GraphFamily {
    std::vector<Graph> members;
    std::string name;

    GraphFamily(std::vector<Graph> m, std::string label);
    int size() const { return static_cast<int>(members.size()); }
};

}  // namespace ramseylab
