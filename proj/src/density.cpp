#include "ramseylab/density.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace ramseylab {

namespace {

using std::uint64_t;

// ---------------------------------------------------------------------------
// Ratio maximization over induced vertex subsets.
//
// Every density functional here maximizes (e_S + num_off) / (|S| + den_off)
// over vertex subsets S. Maximizers are always induced subgraphs (adding an
// edge inside the same support strictly increases the ratio), so scanning
// vertex subsets is exact. Connected enumeration is used where the mediant
// inequality shows maximizers can be taken connected; the strictness
// checkers use the full-subset scan so that tying disconnected subgraphs
// are also seen.
// ---------------------------------------------------------------------------

constexpr int kConnectedScanLimit = 26;
constexpr int kFullScanLimit = 20;

struct ScanSpec {
    long long num_off;
    Rat den_off;
    int v_min;
    bool connected;
};

struct ScanResult {
    bool found = false;
    Rat best;
    std::vector<uint64_t> maximizers;  // every subset attaining `best`
};

class SubsetScanner {
  public:
    SubsetScanner(const Graph& g, const ScanSpec& spec)
        : g_(g), spec_(spec), adj_(g.adjacency_masks()),
          p_(spec.den_off.numerator()), q_(spec.den_off.denominator()) {}

    ScanResult run() {
        uint64_t all = (g_.n >= 64) ? ~0ULL : ((1ULL << g_.n) - 1);
        if (spec_.connected) {
            // Each connected subset is generated once, from its minimum
            // vertex, extending only with vertices above the root.
            for (int r = 0; r < g_.n; ++r) {
                high_ = all & (~0ULL << r);
                uint64_t rbit = 1ULL << r;
                extend(rbit, 1, 0, adj_[r] & high_ & ~rbit, 0);
            }
        } else {
            for (uint64_t s = 1; s <= all && all; ++s) {
                int v = std::popcount(s);
                if (v >= spec_.v_min) score(s, v, edges_in(s));
                if (s == all) break;
            }
        }
        return std::move(result_);
    }

  private:
    __int128 num_of(long long e) const {
        __int128 n = static_cast<__int128>(e + spec_.num_off) * q_;
        return n < 0 ? 0 : n;  // ratios are clamped at zero
    }
    __int128 den_of(long long v) const { return static_cast<__int128>(v) * q_ + p_; }

    long long edges_in(uint64_t s) const {
        long long e = 0;
        uint64_t rest = s;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            e += std::popcount(adj_[v] & rest);
        }
        return e;
    }

    void score(uint64_t s, int v, long long e) {
        __int128 den = den_of(v);
        if (den <= 0) return;
        __int128 num = num_of(e);
        if (!result_.found) {
            result_.found = true;
            set_best(num, den, s);
            return;
        }
        __int128 lhs = num * best_den_, rhs = best_num_ * den;
        if (lhs > rhs)
            set_best(num, den, s);
        else if (lhs == rhs)
            result_.maximizers.push_back(s);
    }

    void set_best(__int128 num, __int128 den, uint64_t s) {
        best_num_ = num;
        best_den_ = den;
        result_.best = Rat(static_cast<long long>(num), static_cast<long long>(den));
        result_.maximizers.assign(1, s);
    }

    // Sound upper bound: r extra vertices add at most r|S| + C(r,2) edges.
    // Ties must survive pruning (witness tie-breaks), so >= keeps the branch.
    bool can_beat(int v, long long e, int avail) const {
        if (!result_.found) return true;
        for (int r = 0; r <= avail; ++r) {
            if (v + r < spec_.v_min) continue;
            __int128 den = den_of(v + r);
            if (den <= 0) continue;
            long long emax = e + static_cast<long long>(r) * v + static_cast<long long>(r) * (r - 1) / 2;
            if (num_of(emax) * best_den_ >= best_num_ * den) return true;
        }
        return false;
    }

    // `forb` holds vertices consumed by earlier sibling branches anywhere up
    // the tree; a subset may only be generated through the first branch
    // where each of its vertices became reachable.
    void extend(uint64_t s, int v, long long e, uint64_t ext, uint64_t forb) {
        if (v >= spec_.v_min) score(s, v, e);
        while (ext) {
            uint64_t ubit = ext & (~ext + 1);
            int u = std::countr_zero(ubit);
            ext &= ~ubit;
            uint64_t ns = s | ubit;
            long long ne = e + std::popcount(adj_[u] & s);
            int avail = std::popcount(high_ & ~ns & ~forb);
            if (can_beat(v + 1, ne, avail)) {
                uint64_t fresh = adj_[u] & high_ & ~ns & ~forb & ~ext;
                extend(ns, v + 1, ne, ext | fresh, forb);
            }
            forb |= ubit;
        }
    }

    const Graph& g_;
    ScanSpec spec_;
    std::vector<uint64_t> adj_;
    long long p_, q_;
    uint64_t high_ = ~0ULL;
    __int128 best_num_ = 0, best_den_ = 1;
    ScanResult result_;
};

ScanResult scan(const Graph& g, const ScanSpec& spec) {
    int limit = spec.connected ? kConnectedScanLimit : kFullScanLimit;
    if (g.n > limit)
        throw DomainError("exact density scan supports at most " + std::to_string(limit) +
                          " vertices (got " + std::to_string(g.n) + ")");
    if (g.n == 0) return {};
    return SubsetScanner(g, spec).run();
}

std::vector<int> mask_vertices(uint64_t m) {
    std::vector<int> out;
    while (m) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

// Lexicographic order on ascending vertex lists; used for witness tie-breaks.
bool mask_lex_less(uint64_t a, uint64_t b) {
    std::vector<int> va = mask_vertices(a), vb = mask_vertices(b);
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

uint64_t pick_witness_mask(const ScanResult& r) {
    uint64_t best = r.maximizers.front();
    for (uint64_t m : r.maximizers)
        if (m != best && mask_lex_less(m, best)) best = m;
    return best;
}

uint64_t pick_minimal_mask(const ScanResult& r) {
    uint64_t best = r.maximizers.front();
    for (uint64_t m : r.maximizers) {
        int pm = std::popcount(m), pb = std::popcount(best);
        if (pm < pb || (pm == pb && m != best && mask_lex_less(m, best))) best = m;
    }
    return best;
}

// Induced edges of a vertex subset of `g`, as a host EdgeSet.
EdgeSet induced_edges(const Graph& g, const std::vector<int>& verts) {
    std::vector<char> in(g.n, 0);
    for (int v : verts) in[v] = 1;
    EdgeSet s(g);
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges[i];
        if (in[u] && in[v]) s.add(i);
    }
    return s;
}

// Strips isolated vertices; `map` gives original labels of kept vertices.
struct Stripped {
    Graph graph;
    std::vector<int> map;
};

Stripped strip_isolated(const Graph& g) {
    Stripped out;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) > 0) out.map.push_back(v);
    std::vector<int> inv(g.n, -1);
    for (std::size_t i = 0; i < out.map.size(); ++i) inv[out.map[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges) e.emplace_back(inv[u], inv[v]);
    out.graph = Graph::from_edges(static_cast<int>(out.map.size()), std::move(e));
    return out;
}

// 2-core: iteratively delete vertices of degree <= 1. Returns the vertex
// labels (of `g`) remaining; empty iff g is a forest.
std::vector<int> two_core_vertices(const Graph& g) {
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<char> gone(g.n, 0);
    std::vector<int> queue;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] <= 1) queue.push_back(v), gone[v] = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w : g.adj[v])
            if (!gone[w] && --deg[w] <= 1) gone[w] = 1, queue.push_back(w);
    }
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
        if (!gone[v]) keep.push_back(v);
    return keep;
}

Density density_from_scan(const Graph& g, const Stripped& st, const ScanResult& r) {
    uint64_t m = pick_witness_mask(r);
    std::vector<int> verts;
    for (int v : mask_vertices(m)) verts.push_back(st.map[v]);
    return {r.best, induced_edges(g, verts)};
}

// Restriction of `g` to a vertex subset (by original labels).
Stripped restrict_to(const Graph& g, const std::vector<int>& verts) {
    Stripped out;
    out.map = verts;
    std::vector<int> inv(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) inv[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges)
        if (inv[u] >= 0 && inv[v] >= 0) e.emplace_back(inv[u], inv[v]);
    out.graph = Graph::from_edges(static_cast<int>(verts.size()), std::move(e));
    return out;
}

}  // namespace

Density max_density(const Graph& g) {
    if (g.n == 0) throw DomainError("max_density needs at least one vertex");
    if (g.edge_count() == 0) return {Rat(0), EdgeSet(g)};
    Stripped st = strip_isolated(g);
    if (st.graph.n <= kConnectedScanLimit) {
        ScanResult r = scan(st.graph, {0, Rat(0), 1, true});
        return density_from_scan(g, st, r);
    }
    // Large sparse host: a maximizer with ratio >= 1 survives leaf-stripping
    // (removing a leaf does not decrease e/v once e >= v), so it lies in the
    // 2-core; if the graph is a forest the best subtree is a whole component.
    std::vector<int> core = two_core_vertices(g);
    if (!core.empty()) {
        Stripped cs = restrict_to(g, core);
        ScanResult r = scan(cs.graph, {0, Rat(0), 1, true});
        return density_from_scan(g, cs, r);
    }
    // Forest: take the largest component (ties: smallest vertex labels).
    std::vector<int> comp(g.n, -1);
    int best_root = -1;
    long long best_size = 0;
    for (int v = 0; v < g.n; ++v) {
        if (comp[v] >= 0 || g.degree(v) == 0) continue;
        long long size = 0;
        std::vector<int> stack = {v};
        comp[v] = v;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            ++size;
            for (int w : g.adj[x])
                if (comp[w] < 0) comp[w] = v, stack.push_back(w);
        }
        if (size > best_size) best_size = size, best_root = v;
    }
    std::vector<int> verts;
    for (int v = 0; v < g.n; ++v)
        if (comp[v] == best_root) verts.push_back(v);
    return {Rat(best_size - 1, best_size), induced_edges(g, verts)};
}

Density one_density(const Graph& g) {
    if (g.n < 2) throw DomainError("one_density needs at least two vertices");
    if (g.edge_count() == 0) return {Rat(0), EdgeSet(g)};
    Stripped st = strip_isolated(g);
    ScanResult r = scan(st.graph, {0, Rat(-1), 2, true});
    return density_from_scan(g, st, r);
}

Density two_density(const Graph& g) {
    if (g.edge_count() == 0) return {Rat(0), EdgeSet(g)};
    Stripped st = strip_isolated(g);
    const Rat half(1, 2);
    if (st.graph.n <= kConnectedScanLimit) {
        ScanResult r = scan(st.graph, {-1, Rat(-2), 3, true});
        // Connected subgraphs on >= 3 vertices have (e-1)/(v-2) >= 1, so a
        // found scan always beats the K2 convention value 1/2.
        if (r.found) return density_from_scan(g, st, r);
        return {half, EdgeSet(g)};
    }
    // Large sparse host: any maximizer above 1 lies in the 2-core.
    std::vector<int> core = two_core_vertices(g);
    if (!core.empty()) {
        Stripped cs = restrict_to(g, core);
        ScanResult r = scan(cs.graph, {-1, Rat(-2), 3, true});
        return density_from_scan(g, cs, r);
    }
    // Forest: value 1 iff two adjacent edges exist, else the K2 convention.
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) >= 2) {
            EdgeSet w(g);
            w.add(g.edge_index(v, g.adj[v][0]));
            w.add(g.edge_index(v, g.adj[v][1]));
            return {Rat(1), w};
        }
    }
    return {half, EdgeSet(g)};
}

Density mixed_density(const Graph& h, const Rat& m2_light) {
    if (h.n < 2 || h.edge_count() == 0)
        throw DomainError("mixed_density needs >= 2 vertices and an edge");
    if (m2_light <= Rat(0)) throw DomainError("mixed_density needs m2_light > 0");
    Stripped st = strip_isolated(h);
    Rat inv = Rat(1) / m2_light;
    // Components recombine via the mediant only when 1/m2_light <= 2, so the
    // connected scan is exact exactly in that regime.
    bool connected = inv <= Rat(2);
    ScanResult r = scan(st.graph, {0, inv - Rat(2), 2, connected});
    return density_from_scan(h, st, r);
}

FamilyDensity family_two_density(const GraphFamily& f) {
    FamilyDensity out{Rat(0), -1, {Rat(0), EdgeSet()}};
    for (int i = 0; i < f.size(); ++i) {
        Density d = two_density(f.members[i]);
        if (out.member < 0 || d.value < out.value) {
            out.value = d.value;
            out.member = i;
            out.member_density = d;
        }
    }
    return out;
}

FamilyDensity family_mixed_density(const GraphFamily& heavy, const GraphFamily& light) {
    Rat m2h = family_two_density(heavy).value;
    Rat m2l = family_two_density(light).value;
    if (m2h < m2l)
        throw OrderingError("family_mixed_density needs m2(heavy) >= m2(light), got " +
                            rat_str(m2h) + " < " + rat_str(m2l));
    FamilyDensity out{Rat(0), -1, {Rat(0), EdgeSet()}};
    for (int i = 0; i < heavy.size(); ++i) {
        Density d = mixed_density(heavy.members[i], m2l);
        if (out.member < 0 || d.value < out.value) {
            out.value = d.value;
            out.member = i;
            out.member_density = d;
        }
    }
    return out;
}

namespace {

// Shared skeleton of the two strictness checkers. `r` must come from a scan
// that sees every maximizer. Balanced iff the unique maximizer is the whole
// vertex set; otherwise the lex-smallest proper maximizer is the violator.
BalanceCheck strictness_from(const Graph& h, const Stripped& st, const ScanResult& r) {
    uint64_t full = (1ULL << st.graph.n) - 1;
    if (static_cast<int>(st.map.size()) < h.n) {
        // Isolated vertices: deleting one leaves the density unchanged.
        return {false, induced_edges(h, st.map)};
    }
    uint64_t proper = 0;
    bool has_proper = false;
    for (uint64_t m : r.maximizers) {
        if (m == full) continue;
        if (!has_proper || mask_lex_less(m, proper)) proper = m, has_proper = true;
    }
    if (!has_proper) return {true, std::nullopt};
    std::vector<int> verts;
    for (int v : mask_vertices(proper)) verts.push_back(st.map[v]);
    return {false, induced_edges(h, verts)};
}

}  // namespace

BalanceCheck is_strictly_two_balanced(const Graph& h) {
    if (h.edge_count() == 0) throw DomainError("strict balancedness needs an edge");
    if (h.n == 2 && h.edge_count() == 1) return {true, std::nullopt};  // K2
    Stripped st = strip_isolated(h);
    if (static_cast<int>(st.map.size()) < h.n) return {false, induced_edges(h, st.map)};
    ScanResult r = scan(st.graph, {-1, Rat(-2), 3, true});
    if (!r.found || r.best <= Rat(1, 2)) {
        // m2 equals the K2 convention; any single edge is a tying subgraph.
        EdgeSet v(h);
        v.add(0);
        return {false, v};
    }
    return strictness_from(h, st, r);
}

BalanceCheck is_strictly_mixed_balanced(const Graph& h, const Rat& m2_light) {
    if (h.edge_count() == 0) throw DomainError("strict balancedness needs an edge");
    if (m2_light <= Rat(0)) throw DomainError("m2_light must be positive");
    if (h.n == 2 && h.edge_count() == 1) return {true, std::nullopt};  // K2
    Stripped st = strip_isolated(h);
    if (static_cast<int>(st.map.size()) < h.n) return {false, induced_edges(h, st.map)};
    // Full-subset scan: disconnected subgraphs can tie when 1/m2_light = 2.
    ScanResult r = scan(st.graph, {0, Rat(1) / m2_light - Rat(2), 2, false});
    return strictness_from(h, st, r);
}

BalancedPair make_balanced_pair(const GraphFamily& heavy, const GraphFamily& light,
                                bool relaxed) {
    BalancedPair pair{heavy, light, Rat(0), Rat(0), Rat(0), relaxed};
    pair.m2_light = family_two_density(light).value;
    pair.m2_heavy = family_two_density(heavy).value;
    pair.alpha = family_mixed_density(heavy, light).value;
    if (relaxed) return pair;
    if (pair.m2_heavy <= pair.m2_light)
        throw OrderingError("pair needs m2(heavy) > m2(light), got " + rat_str(pair.m2_heavy) +
                            " <= " + rat_str(pair.m2_light));
    for (const Graph& l : light.members)
        if (!is_strictly_two_balanced(l).balanced)
            throw DomainError("light member is not strictly 2-balanced");
    for (const Graph& h : heavy.members)
        if (!is_strictly_mixed_balanced(h, pair.m2_light).balanced)
            throw DomainError("heavy member is not strictly mixed-balanced");
    if (!(pair.m2_light < pair.alpha && pair.alpha < pair.m2_heavy))
        throw InternalError("density sandwich violated: " + rat_str(pair.m2_light) + " / " +
                            rat_str(pair.alpha) + " / " + rat_str(pair.m2_heavy));
    return pair;
}

namespace {

Graph minimal_attainer(const Graph& g, const ScanSpec& spec) {
    Stripped st = strip_isolated(g);
    ScanResult r = scan(st.graph, spec);
    if (!r.found) throw InternalError("no attaining subgraph in reduction");
    uint64_t m = pick_minimal_mask(r);
    std::vector<int> verts;
    for (int v : mask_vertices(m)) verts.push_back(st.map[v]);
    return edge_subgraph(g, induced_edges(g, verts)).graph;
}

}  // namespace

BalancedPair reduce_to_strictly_balanced(const GraphFamily& heavy, const GraphFamily& light) {
    Rat m2l = family_two_density(light).value;
    Rat m2h = family_two_density(heavy).value;
    if (!(m2h > m2l && m2l > Rat(1)))
        throw OrderingError("reduction needs m2(heavy) > m2(light) > 1, got " + rat_str(m2h) +
                            ", " + rat_str(m2l));
    std::vector<Graph> red_light;
    for (const Graph& l : light.members)
        red_light.push_back(minimal_attainer(l, {-1, Rat(-2), 3, true}));
    GraphFamily light2(red_light, light.name);
    // m2(light) is preserved member-by-member, so the mixed scans below see
    // the same value the originals did.
    std::vector<Graph> red_heavy;
    for (const Graph& h : heavy.members) {
        bool connected = Rat(1) / m2l <= Rat(2);
        red_heavy.push_back(minimal_attainer(h, {0, Rat(1) / m2l - Rat(2), 2, connected}));
    }
    GraphFamily heavy2(red_heavy, heavy.name);
    BalancedPair pair = make_balanced_pair(heavy2, light2, false);
    if (pair.m2_light != m2l)
        throw InternalError("reduction changed m2(light)");
    return pair;
}

DegeneracyResult degeneracy(const Graph& g) {
    DegeneracyResult out{0, {}};
    std::vector<int> deg(g.n);
    std::vector<char> gone(g.n, 0);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    for (int step = 0; step < g.n; ++step) {
        int best = -1;
        for (int v = 0; v < g.n; ++v)
            if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
        out.d = std::max(out.d, deg[best]);
        out.removal_order.push_back(best);
        gone[best] = 1;
        for (int w : g.adj[best])
            if (!gone[w]) --deg[w];
    }
    return out;
}

namespace {

long long edges_in_subset(const Graph& g, uint64_t mask) {
    long long e = 0;
    for (auto [u, v] : g.edges)
        if (((mask >> u) & 1) && ((mask >> v) & 1)) ++e;
    return e;
}

uint64_t incident_mask(const Graph& g, uint64_t vertex_mask) {
    uint64_t out = 0;
    for (auto [u, v] : g.edges)
        if (((vertex_mask >> u) & 1) && ((vertex_mask >> v) & 1))
            out |= (1ULL << u) | (1ULL << v);
    return out;
}

}  // namespace

NumericLemmaReport check_numeric_lemmas(const BalancedPair& pair) {
    NumericLemmaReport rep{pair.m2_light, pair.alpha, pair.m2_heavy,
                           false, true, Rat(0), {}, true};
    rep.sandwich_applicable = pair.m2_light < pair.m2_heavy;
    if (rep.sandwich_applicable)
        rep.sandwich_ok = pair.m2_light < pair.alpha && pair.alpha < pair.m2_heavy;

    // X := min over heavy members of (e_H - 1) - alpha (v_H - 2).
    bool first = true;
    for (const Graph& h : pair.heavy.members) {
        Rat x = Rat(h.edge_count() - 1) - pair.alpha * Rat(h.n - 2);
        if (first || x < rep.x_value) rep.x_value = x;
        first = false;
    }

    auto add = [&](LemmaInstance inst) {
        if (!inst.ok) rep.all_ok = false;
        rep.instances.push_back(std::move(inst));
    };

    // Heavy members: e_H - e_F > m2(H, light) (v_H - v_F) over proper
    // induced subgraphs F with v_F >= 2. Non-induced subgraphs only make the
    // left side larger, so induced ones are the tight cases.
    for (int hi = 0; hi < pair.heavy.size(); ++hi) {
        const Graph& h = pair.heavy.members[hi];
        if (h.n > kFullScanLimit) throw DomainError("family member too large for lemma scan");
        Rat mh = mixed_density(h, pair.m2_light).value;
        uint64_t full = (1ULL << h.n) - 1;
        for (uint64_t s = 1; s < full; ++s) {
            int v = std::popcount(s);
            if (v < 2) continue;
            Rat lhs = Rat(h.edge_count() - edges_in_subset(h, s));
            Rat rhs = mh * Rat(h.n - v);
            add({"heavy-slack", false, hi, mask_vertices(s), lhs, rhs, true, lhs > rhs});
        }
    }

    // Light members: e_L - e_J >= m2(L) (v_L - v_J), strict unless J = K2.
    for (int li = 0; li < pair.light.size(); ++li) {
        const Graph& l = pair.light.members[li];
        if (l.n > kFullScanLimit) throw DomainError("family member too large for lemma scan");
        Rat ml = two_density(l).value;
        uint64_t full = (1ULL << l.n) - 1;
        for (uint64_t s = 1; s < full; ++s) {
            int v = std::popcount(s);
            if (v < 2) continue;
            long long e = edges_in_subset(l, s);
            Rat lhs = Rat(l.edge_count() - e);
            Rat rhs = ml * Rat(l.n - v);
            bool is_k2 = (v == 2 && e == 1);
            bool ok = is_k2 ? lhs >= rhs : lhs > rhs;
            add({"light-slack", true, li, mask_vertices(s), lhs, rhs, !is_k2, ok});
        }
    }

    // X + (v_K - 2)(alpha - 1) >= e_K (alpha / m2(L) - 1) for nonempty
    // K <= L; strict unless K = K2. v_K counts incident vertices only.
    for (int li = 0; li < pair.light.size(); ++li) {
        const Graph& l = pair.light.members[li];
        Rat ml = two_density(l).value;
        uint64_t full = (1ULL << l.n) - 1;
        for (uint64_t s = 1; s <= full; ++s) {
            long long e = edges_in_subset(l, s);
            if (e == 0) continue;
            int v = std::popcount(incident_mask(l, s));
            Rat lhs = rep.x_value + Rat(v - 2) * (pair.alpha - Rat(1));
            Rat rhs = Rat(e) * (pair.alpha / ml - Rat(1));
            bool is_k2 = (v == 2 && e == 1);
            bool ok = is_k2 ? lhs >= rhs : lhs > rhs;
            add({"x-vs-alpha", true, li, mask_vertices(s), lhs, rhs, !is_k2, ok});
            if (s == full) break;
        }
    }

    if (rep.sandwich_applicable && !rep.sandwich_ok) rep.all_ok = false;
    return rep;
}

}  // namespace ramseylab
