#include "ramseylab/catalog.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "ramseylab/graph6.hpp"

namespace ramseylab {

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

bool is_acyclic(const Graph& g) {
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : g.edges) {
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

namespace {

// Invariant key used to bucket candidate graphs before exact isomorphism
// tests: per-vertex (degree, triangle count, sorted neighbor degrees).
std::vector<int> invariant_key(const Graph& g) {
    std::vector<int> tri(g.n, 0);
    for (auto [u, v] : g.edges)
        for (int w : g.adj[u])
            if (w != v && g.has_edge(w, v)) ++tri[u], ++tri[v], ++tri[w];
    std::vector<std::vector<int>> per_vertex(g.n);
    for (int v = 0; v < g.n; ++v) {
        std::vector<int> nd;
        for (int w : g.adj[v]) nd.push_back(g.degree(w));
        std::sort(nd.begin(), nd.end());
        per_vertex[v] = {g.degree(v), tri[v]};
        per_vertex[v].insert(per_vertex[v].end(), nd.begin(), nd.end());
    }
    std::sort(per_vertex.begin(), per_vertex.end());
    std::vector<int> key = {g.n, g.edge_count()};
    for (auto& pv : per_vertex) {
        key.push_back(-1);
        key.insert(key.end(), pv.begin(), pv.end());
    }
    return key;
}

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<int> map_ab;  // a-vertex -> b-vertex or -1
    std::vector<char> used_b;
    std::vector<int> order;  // order in which a's vertices are mapped

    IsoSearch(const Graph& a_, const Graph& b_) : a(a_), b(b_) {
        map_ab.assign(a.n, -1);
        used_b.assign(b.n, 0);
        // Map high-degree vertices first, preferring vertices adjacent to
        // already-ordered ones so adjacency constraints bind early.
        std::vector<char> placed(a.n, 0);
        for (int step = 0; step < a.n; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < a.n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int w : a.adj[v]) links += placed[w];
                if (links > best_links || (links == best_links && a.degree(v) > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = a.degree(v);
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
    }

    bool rec(int depth) {
        if (depth == a.n) return true;
        int v = order[depth];
        for (int cand = 0; cand < b.n; ++cand) {
            if (used_b[cand] || b.degree(cand) != a.degree(v)) continue;
            bool ok = true;
            for (int w : a.adj[v]) {
                if (map_ab[w] >= 0 && !b.has_edge(cand, map_ab[w])) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                // Non-neighbors must stay non-adjacent (exact isomorphism).
                for (int u = 0; u < a.n && ok; ++u)
                    if (map_ab[u] >= 0 && !a.has_edge(v, u) && b.has_edge(cand, map_ab[u])) ok = false;
            }
            if (!ok) continue;
            map_ab[v] = cand;
            used_b[cand] = 1;
            if (rec(depth + 1)) return true;
            map_ab[v] = -1;
            used_b[cand] = 0;
        }
        return false;
    }
};

}  // namespace

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    if (invariant_key(a) != invariant_key(b)) return false;
    if (a.n == 0) return true;
    IsoSearch s(a, b);
    return s.rec(0);
}

namespace {

// Unlocked worker; the public entry point serializes access to the cache.
const std::vector<Graph>& all_graphs_locked(int n, std::map<int, std::vector<Graph>>& cache) {
    if (auto it = cache.find(n); it != cache.end()) return it->second;
    if (n < 1 || n > 10) throw DomainError("graph catalog supports 1 <= n <= 10");

    std::vector<Graph> result;
    if (n == 1) {
        result.push_back(Graph::from_edges(1, {}));
    } else {
        const std::vector<Graph>& smaller = all_graphs_locked(n - 1, cache);
        // Extend every (n-1)-vertex representative by one vertex with every
        // possible neighborhood, then dedupe by invariant bucket + exact test.
        std::map<std::vector<int>, std::vector<int>> buckets;  // key -> result indices
        for (const Graph& base : smaller) {
            for (std::uint32_t nb = 0; nb < (1u << (n - 1)); ++nb) {
                std::vector<std::pair<int, int>> e = base.edges;
                for (int v = 0; v < n - 1; ++v)
                    if ((nb >> v) & 1) e.emplace_back(v, n - 1);
                Graph g = Graph::from_edges(n, std::move(e));
                auto key = invariant_key(g);
                auto& bucket = buckets[key];
                bool fresh = true;
                for (int idx : bucket)
                    if (are_isomorphic(g, result[idx])) {
                        fresh = false;
                        break;
                    }
                if (fresh) {
                    bucket.push_back(static_cast<int>(result.size()));
                    result.push_back(std::move(g));
                }
            }
        }
    }
    std::sort(result.begin(), result.end(), [](const Graph& a, const Graph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return write_graph6(a) < write_graph6(b);
    });
    return cache[n] = std::move(result);
}

}  // namespace

const std::vector<Graph>& all_graphs(int n) {
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    return all_graphs_locked(n, cache);
}

std::vector<Graph> graphs_up_to(int n, bool connected_only) {
    std::vector<Graph> out;
    for (int k = 1; k <= n; ++k)
        for (const Graph& g : all_graphs(k))
            if (!connected_only || is_connected(g)) out.push_back(g);
    return out;
}

}  // namespace ramseylab
