#include "ramseylab/matroid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "ramseylab/density.hpp"

namespace ramseylab {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        parent[ra] = rb;
        return true;
    }
};

}  // namespace

bool graphic_independent(const Graph& g, const EdgeSet& s) {
    s.require_host(g);
    UnionFind uf(g.n);
    for (int i : s.indices())
        if (!uf.unite(g.edges[i].first, g.edges[i].second)) return false;
    return true;
}

int graphic_rank(const Graph& g, const EdgeSet& s) {
    s.require_host(g);
    return s.incident_vertex_count() - s.component_count();
}

bool GraphicOracle::independent(const EdgeSet& s) const { return graphic_independent(host(), s); }

SparsityOracle::SparsityOracle(const Graph& host, int k) : IndependenceOracle(host), k_(k) {
    if (k < 1) throw DomainError("sparsity oracle needs k >= 1");
}

namespace {

// (k, 2k-1) pebble game. Every vertex starts with k pebbles; inserting an
// edge uv requires 2k pebbles on {u,v}, gathered by reversing directed paths
// to vertices that still hold spares. All inserted edges are accepted iff
// the set satisfies e_J <= k(v_J - 2) + 1 for every nonempty J.
class PebbleGame {
  public:
    PebbleGame(const Graph& g, int k) : g_(g), k_(k), pebbles_(g.n, k), out_(g.n) {}

    bool insert(int u, int v) {
        while (pebbles_[u] + pebbles_[v] < 2 * k_) {
            if (!pull_pebble(u, v)) return false;
        }
        if (pebbles_[u] > 0) {
            --pebbles_[u];
            out_[u].push_back(v);
        } else {
            --pebbles_[v];
            out_[v].push_back(u);
        }
        return true;
    }

  private:
    // Finds a directed path from {u,v} to a vertex with a spare pebble and
    // reverses it, moving one pebble to the path's start.
    bool pull_pebble(int u, int v) {
        std::vector<int> parent(g_.n, -1), seen(g_.n, 0);
        std::deque<int> queue;
        seen[u] = seen[v] = 1;
        queue.push_back(u);
        queue.push_back(v);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (int y : out_[x]) {
                if (seen[y]) continue;
                seen[y] = 1;
                parent[y] = x;
                if (pebbles_[y] > 0) {
                    reverse_path(y, parent);
                    return true;
                }
                queue.push_back(y);
            }
        }
        return false;
    }

    void reverse_path(int w, const std::vector<int>& parent) {
        --pebbles_[w];
        int y = w;
        while (parent[y] >= 0) {
            int x = parent[y];
            auto it = std::find(out_[x].begin(), out_[x].end(), y);
            out_[x].erase(it);
            out_[y].push_back(x);
            y = x;
        }
        ++pebbles_[y];
    }

    const Graph& g_;
    int k_;
    std::vector<int> pebbles_;
    std::vector<std::vector<int>> out_;
};

}  // namespace

bool sparsity_independent(const Graph& g, const EdgeSet& s, int k) {
    s.require_host(g);
    if (k < 1) throw DomainError("sparsity test needs k >= 1");
    PebbleGame game(g, k);
    for (int i : s.indices())
        if (!game.insert(g.edges[i].first, g.edges[i].second)) return false;
    return true;
}

bool SparsityOracle::independent(const EdgeSet& s) const {
    return sparsity_independent(host(), s, k_);
}

int matroid_rank(const IndependenceOracle& oracle, const EdgeSet& s) {
    s.require_host(oracle.host());
    EdgeSet picked(oracle.host());
    int rank = 0;
    for (int i : s.indices()) {
        picked.add(i);
        if (oracle.independent(picked))
            ++rank;
        else
            picked.remove(i);
    }
    return rank;
}

namespace {

// One augmentation step of the matroid-union algorithm: breadth-first search
// over the exchange digraph, swaps applied along the BFS tree path. Elements
// reached on failure form the deficiency certificate.
class PartitionEngine {
  public:
    PartitionEngine(const Graph& g, const std::vector<const IndependenceOracle*>& oracles)
        : g_(g), oracles_(oracles) {
        for (auto* o : oracles) {
            if (&o->host() != &g) throw HostMismatchError("oracle hosted by a different graph");
            parts_.emplace_back(g);
        }
        part_of_.assign(g.edge_count(), -1);
    }

    PartitionOutcome run(const EdgeSet& ground) {
        for (int e : ground.indices()) {
            EdgeSet reached(g_);
            if (!augment(e, reached)) {
                verify_certificate(reached);
                return {false, {}, reached};
            }
            verify_parts();
        }
        return {true, parts_, EdgeSet(g_)};
    }

  private:
    bool augment(int start, EdgeSet& reached) {
        std::vector<int> parent_elem(g_.edge_count(), -1);
        std::vector<int> parent_matroid(g_.edge_count(), -1);
        std::deque<int> queue = {start};
        reached.add(start);
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < oracles_.size(); ++i) {
                int mi = static_cast<int>(i);
                if (part_of_[x] == mi) continue;
                EdgeSet trial = parts_[i];
                trial.add(x);
                if (oracles_[i]->independent(trial)) {
                    apply_swaps(x, mi, parent_elem, parent_matroid);
                    return true;
                }
                // Circuit elements: y in part i whose removal frees x.
                for (int y : parts_[i].indices()) {
                    if (reached.contains(y)) continue;
                    EdgeSet swap = trial;
                    swap.remove(y);
                    if (oracles_[i]->independent(swap)) {
                        reached.add(y);
                        parent_elem[y] = x;
                        parent_matroid[y] = mi;
                        queue.push_back(y);
                    }
                }
            }
        }
        return false;
    }

    // Walk back along the BFS tree: x enters matroid `into`; each ancestor
    // replaces its child in the matroid labeling the tree arc.
    void apply_swaps(int x, int into, const std::vector<int>& parent_elem,
                     const std::vector<int>& parent_matroid) {
        set_part(x, into);
        int child = x;
        while (parent_elem[child] >= 0) {
            int y = parent_elem[child];
            set_part(y, parent_matroid[child]);
            child = y;
        }
    }

    void set_part(int e, int mi) {
        if (part_of_[e] >= 0) parts_[part_of_[e]].remove(e);
        part_of_[e] = mi;
        parts_[mi].add(e);
    }

    void verify_parts() const {
        for (std::size_t i = 0; i < oracles_.size(); ++i)
            if (!oracles_[i]->independent(parts_[i]))
                throw InternalError("matroid partition produced a dependent part");
    }

    void verify_certificate(const EdgeSet& x) const {
        long long ranks = 0;
        for (auto* o : oracles_) ranks += matroid_rank(*o, x);
        if (ranks >= x.size())
            throw InternalError("matroid partition certificate fails rank check");
    }

    const Graph& g_;
    const std::vector<const IndependenceOracle*>& oracles_;
    std::vector<EdgeSet> parts_;
    std::vector<int> part_of_;
};

}  // namespace

PartitionOutcome matroid_partition(const Graph& g,
                                   const std::vector<const IndependenceOracle*>& oracles,
                                   const EdgeSet* ground) {
    if (oracles.empty()) throw DomainError("matroid partition needs oracles");
    EdgeSet all = ground ? *ground : EdgeSet::full(g);
    all.require_host(g);
    PartitionEngine engine(g, oracles);
    return engine.run(all);
}

PartitionOutcome matroid_partition2(const Graph& g, const IndependenceOracle& o1,
                                    const IndependenceOracle& o2) {
    return matroid_partition(g, {&o1, &o2});
}

std::vector<EdgeSet> nash_williams(const Graph& g) {
    if (g.edge_count() == 0) throw DomainError("nash_williams needs an edge");
    long long t = rat_ceil(one_density(g).value);
    GraphicOracle oracle(g);
    std::vector<const IndependenceOracle*> oracles(static_cast<std::size_t>(t), &oracle);
    PartitionOutcome out = matroid_partition(g, oracles);
    if (!out.success)
        throw InternalError("Nash-Williams partition impossible at t = ceil(m1)");
    for (const EdgeSet& f : out.parts)
        if (!graphic_independent(g, f)) throw InternalError("Nash-Williams part has a cycle");
    return out.parts;
}

namespace {

// Orientation with max out-degree <= k via path reversal; returns per-edge
// direction (true: edges[i].first is the tail) or throws InfeasibleError
// with a witness subgraph of density > k.
std::vector<char> orient_bounded(const Graph& g, int k) {
    std::vector<std::vector<std::pair<int, int>>> out(g.n);  // vertex -> (head, edge idx)
    std::vector<char> tail_is_first(g.edge_count(), 1);
    std::vector<int> outdeg(g.n, 0);

    auto reverse_to_spare = [&](int from) -> bool {
        std::vector<int> parent_v(g.n, -1), parent_e(g.n, -1);
        std::vector<char> seen(g.n, 0);
        std::deque<int> queue = {from};
        seen[from] = 1;
        while (!queue.empty()) {
            int x = queue.front();
            queue.pop_front();
            if (outdeg[x] < k && x != from) {
                // Reverse the path from `from` to x.
                int y = x;
                while (parent_v[y] >= 0) {
                    int px = parent_v[y], ei = parent_e[y];
                    auto it = std::find(out[px].begin(), out[px].end(), std::make_pair(y, ei));
                    out[px].erase(it);
                    out[y].emplace_back(px, ei);
                    tail_is_first[ei] = (g.edges[ei].first == y);
                    ++outdeg[y];
                    --outdeg[px];
                    y = px;
                }
                return true;
            }
            for (auto [h, ei] : out[x]) {
                if (!seen[h]) {
                    seen[h] = 1;
                    parent_v[h] = x;
                    parent_e[h] = ei;
                    queue.push_back(h);
                }
            }
        }
        return false;
    };

    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges[i];
        int tail = -1;
        if (outdeg[u] < k) {
            tail = u;
        } else if (outdeg[v] < k) {
            tail = v;
        } else if (reverse_to_spare(u)) {
            tail = u;
        } else if (reverse_to_spare(v)) {
            tail = v;
        } else {
            // All vertices reachable from u and v are saturated; their
            // out-edges plus {u,v} form a witness with e > k v.
            std::vector<char> seen(g.n, 0);
            std::vector<int> stack = {u, v};
            seen[u] = seen[v] = 1;
            std::vector<int> witness = {i};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [h, ei] : out[x]) {
                    witness.push_back(ei);
                    if (!seen[h]) seen[h] = 1, stack.push_back(h);
                }
            }
            std::sort(witness.begin(), witness.end());
            throw InfeasibleError("graph density exceeds " + std::to_string(k) +
                                      ": orientation witness found",
                                  witness);
        }
        int head = (tail == u) ? v : u;
        out[tail].emplace_back(head, i);
        ++outdeg[tail];
        tail_is_first[i] = (tail == g.edges[i].first);
    }
    return tail_is_first;
}

}  // namespace

std::vector<EdgeSet> hakimi_pseudoforests(const Graph& g, int k) {
    if (k < 1) throw DomainError("hakimi needs k >= 1");
    std::vector<char> tail_is_first = orient_bounded(g, k);
    std::vector<EdgeSet> classes(static_cast<std::size_t>(k), EdgeSet(g));
    std::vector<int> used(g.n, 0);
    for (int i = 0; i < g.edge_count(); ++i) {
        int tail = tail_is_first[i] ? g.edges[i].first : g.edges[i].second;
        classes[used[tail]++].add(i);
    }
    // Out-degree <= 1 per class gives e <= v on every component.
    for (const EdgeSet& cls : classes) {
        Subgraph sub = edge_subgraph(g, cls);
        if (cls.size() > 0 && max_density(sub.graph).value > Rat(1))
            throw InternalError("hakimi class exceeds pseudoforest density");
    }
    return classes;
}

EdgeSet sparse_witness(const Graph& g, int k) {
    std::vector<EdgeSet> classes = hakimi_pseudoforests(g, k);
    EdgeSet result(g);
    int last_nonempty = -1;
    for (int i = 0; i < k; ++i)
        if (!classes[i].empty()) last_nonempty = i;
    if (last_nonempty >= 0) {
        for (int i = 0; i < k; ++i)
            if (i != last_nonempty) result |= classes[i];
        result.add(classes[last_nonempty].indices().front());
    }
    // Verify both guarantees before returning.
    if (!result.empty()) {
        Subgraph sub = edge_subgraph(g, result);
        if (two_density(sub.graph).value > Rat(k))
            throw InternalError("sparse witness exceeds 2-density bound");
    }
    if (g.edge_count() > result.size() + g.n - 1)
        throw InternalError("sparse witness misses the edge-count bound");
    return result;
}

}  // namespace ramseylab
