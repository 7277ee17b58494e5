#include "ramseylab/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ramseylab {

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> e) {
    if (n < 0) throw DomainError("negative vertex count");
    for (auto& [u, v] : e) {
        if (u == v) throw DomainError("loop edge " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw DomainError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
        throw DomainError("parallel edge");
    Graph g;
    g.n = n;
    g.edges = std::move(e);
    g.adj.assign(n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges.begin(), edges.end(), std::make_pair(u, v));
    if (it != edges.end() && *it == std::make_pair(u, v))
        return static_cast<int>(it - edges.begin());
    return -1;
}

std::vector<std::uint64_t> Graph::adjacency_masks() const {
    if (n > 64) throw DomainError("adjacency masks need n <= 64");
    std::vector<std::uint64_t> m(n, 0);
    for (auto [u, v] : edges) {
        m[u] |= 1ULL << v;
        m[v] |= 1ULL << u;
    }
    return m;
}

Graph make_complete(int k) {
    if (k < 1) throw DomainError("complete graph needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
    return Graph::from_edges(k, std::move(e));
}

Graph make_cycle(int k) {
    if (k < 3) throw DomainError("cycle needs k >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return Graph::from_edges(k, std::move(e));
}

Graph make_path(int k) {
    if (k < 1) throw DomainError("path needs k >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(k, std::move(e));
}

Graph make_biclique(int s, int t) {
    if (s < 1 || t < 1) throw DomainError("biclique needs s,t >= 1");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) e.emplace_back(u, s + v);
    return Graph::from_edges(s + t, std::move(e));
}

Graph make_complete_multipartite(const std::vector<int>& parts) {
    if (parts.empty()) throw DomainError("multipartite needs parts");
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw DomainError("part sizes must be >= 1");
        n += p;
    }
    std::vector<int> part_of(n);
    int v = 0, pi = 0;
    for (int p : parts) {
        for (int i = 0; i < p; ++i) part_of[v++] = pi;
        ++pi;
    }
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part_of[a] != part_of[b]) e.emplace_back(a, b);
    return Graph::from_edges(n, std::move(e));
}

Graph make_named(const std::string& spec) {
    if (spec.size() < 2) throw DomainError("unknown graph spec: " + spec);
    char kind = spec[0];
    std::vector<int> nums;
    std::size_t pos = 1;
    while (pos < spec.size()) {
        std::size_t comma = spec.find(',', pos);
        std::string tok = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
            throw DomainError("unknown graph spec: " + spec);
        nums.push_back(std::stoi(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (nums.empty()) throw DomainError("unknown graph spec: " + spec);
    switch (kind) {
        case 'K':
            if (nums.size() == 1) return make_complete(nums[0]);
            if (nums.size() == 2) return make_biclique(nums[0], nums[1]);
            return make_complete_multipartite(nums);
        case 'C':
            if (nums.size() == 1) return make_cycle(nums[0]);
            break;
        case 'P':
            if (nums.size() == 1) return make_path(nums[0]);
            break;
        default:
            break;
    }
    throw DomainError("unknown graph spec: " + spec);
}

EdgeSet EdgeSet::full(const Graph& host) {
    EdgeSet s(host);
    for (int i = 0; i < host.edge_count(); ++i) s.add(i);
    return s;
}

EdgeSet EdgeSet::of(const Graph& host, const std::vector<int>& indices) {
    EdgeSet s(host);
    for (int i : indices) s.add(i);
    return s;
}

int EdgeSet::size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
}

bool EdgeSet::empty() const {
    for (auto w : words_)
        if (w) return false;
    return true;
}

std::vector<int> EdgeSet::indices() const {
    std::vector<int> out;
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w) {
            out.push_back(static_cast<int>(wi * 64 + std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
    if (host_ != o.host_) throw HostMismatchError("edge sets have different hosts");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
    if (host_ != o.host_) throw HostMismatchError("edge sets have different hosts");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

EdgeSet& EdgeSet::subtract(const EdgeSet& o) {
    if (host_ != o.host_) throw HostMismatchError("edge sets have different hosts");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
}

EdgeSet EdgeSet::complement() const {
    EdgeSet out = EdgeSet::full(host());
    out.subtract(*this);
    return out;
}

bool EdgeSet::intersects(const EdgeSet& o) const {
    if (host_ != o.host_) throw HostMismatchError("edge sets have different hosts");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & o.words_[i]) return true;
    return false;
}

bool EdgeSet::is_subset_of(const EdgeSet& o) const {
    if (host_ != o.host_) throw HostMismatchError("edge sets have different hosts");
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

std::uint64_t EdgeSet::mask64() const {
    if (host().edge_count() > 64)
        throw DomainError("mask64 needs a host with at most 64 edges");
    return words_.empty() ? 0 : words_[0];
}

std::vector<int> EdgeSet::incident_vertices() const {
    std::vector<char> seen(host().n, 0);
    for (int i : indices()) {
        seen[host().edges[i].first] = 1;
        seen[host().edges[i].second] = 1;
    }
    std::vector<int> out;
    for (int v = 0; v < host().n; ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

int EdgeSet::incident_vertex_count() const {
    return static_cast<int>(incident_vertices().size());
}

namespace {
int uf_find(std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
}
}  // namespace

int EdgeSet::component_count() const {
    std::vector<int> parent(host().n);
    std::iota(parent.begin(), parent.end(), 0);
    int verts = 0, merges = 0;
    std::vector<char> seen(host().n, 0);
    for (int i : indices()) {
        auto [u, v] = host().edges[i];
        if (!seen[u]) { seen[u] = 1; ++verts; }
        if (!seen[v]) { seen[v] = 1; ++verts; }
        int ru = uf_find(parent, u), rv = uf_find(parent, v);
        if (ru != rv) { parent[ru] = rv; ++merges; }
    }
    return verts - merges;
}

Subgraph edge_subgraph(const Graph& g, const EdgeSet& s) {
    s.require_host(g);
    Subgraph out;
    out.vertex_map = s.incident_vertices();
    std::vector<int> inv(g.n, -1);
    for (std::size_t i = 0; i < out.vertex_map.size(); ++i) inv[out.vertex_map[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (int i : s.indices()) {
        auto [u, v] = g.edges[i];
        e.emplace_back(inv[u], inv[v]);
    }
    out.graph = Graph::from_edges(static_cast<int>(out.vertex_map.size()), std::move(e));
    return out;
}

GraphFamily::GraphFamily(std::vector<Graph> m, std::string label)
    : members(std::move(m)), name(std::move(label)) {
    if (members.empty()) throw DomainError("family must be nonempty");
    for (const auto& g : members)
        if (g.edge_count() == 0)
            throw DomainError("family member without edges in " + name);
}

}  // namespace ramseylab
