#include "ramseylab/decompose.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "ramseylab/copies.hpp"
#include "ramseylab/matroid.hpp"

namespace ramseylab {

namespace {

Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> inv(g.n, -1);
    for (std::size_t i = 0; i < verts.size(); ++i) inv[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges)
        if (inv[u] >= 0 && inv[v] >= 0) e.emplace_back(inv[u], inv[v]);
    return Graph::from_edges(static_cast<int>(verts.size()), std::move(e));
}

}  // namespace

std::vector<std::vector<int>> degenerate_vertex_partition(const Graph& g, int d, int k) {
    if (d < 1 || k < 1) throw DomainError("degenerate partition needs d, k >= 1");
    DegeneracyResult deg = degeneracy(g);
    if (deg.d > d * k - 1)
        throw InfeasibleError("graph is not (dk-1)-degenerate: degeneracy " +
                              std::to_string(deg.d));
    // Reversed removal order: every vertex sees at most dk-1 neighbors
    // before it. Greedy least-loaded assignment then caps the count of
    // same-class preceding neighbors at d-1 by pigeonhole.
    std::vector<int> order(deg.removal_order.rbegin(), deg.removal_order.rend());
    std::vector<int> part_of(g.n, -1);
    std::vector<std::vector<int>> parts(k);
    for (int v : order) {
        std::vector<int> load(k, 0);
        for (int w : g.adj[v])
            if (part_of[w] >= 0) ++load[part_of[w]];
        int best = 0;
        for (int j = 1; j < k; ++j)
            if (load[j] < load[best]) best = j;
        if (load[best] > d - 1) throw InternalError("greedy class load exceeds d-1");
        part_of[v] = best;
        parts[best].push_back(v);
    }
    for (auto& p : parts) std::sort(p.begin(), p.end());
    for (const auto& p : parts)
        if (degeneracy(induced_subgraph(g, p)).d > d - 1)
            throw InternalError("vertex class is not (d-1)-degenerate");
    return parts;
}

namespace {

EdgeBipartition classify_by_parts(const Graph& g, const std::vector<std::vector<int>>& parts,
                                  bool red_inside, std::string strategy) {
    std::vector<int> part_of(g.n, -1);
    for (std::size_t j = 0; j < parts.size(); ++j)
        for (int v : parts[j]) part_of[v] = static_cast<int>(j);
    EdgeBipartition out{EdgeSet(g), EdgeSet(g), std::move(strategy)};
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges[i];
        bool inside = part_of[u] == part_of[v];
        if (inside == red_inside)
            out.red.add(i);
        else
            out.blue.add(i);
    }
    return out;
}

void require_density_below(const Graph& g, long long k, const char* who) {
    Rat m = max_density(g).value;
    if (m >= Rat(k))
        throw InfeasibleError(std::string(who) + " needs m(G) < k, got m = " + rat_str(m));
}

}  // namespace

EdgeBipartition split_bipartite_case(const Graph& g, int k) {
    require_density_below(g, k, "split_bipartite_case");
    auto parts = degenerate_vertex_partition(g, k, 2);
    return classify_by_parts(g, parts, true, "bipartite(k=" + std::to_string(k) + ")");
}

EdgeBipartition split_chromatic_case(const Graph& g, int k) {
    require_density_below(g, k, "split_chromatic_case");
    auto parts = degenerate_vertex_partition(g, 2, k);
    return classify_by_parts(g, parts, false, "chromatic(k=" + std::to_string(k) + ")");
}

EdgeBipartition split_forest_case(const Graph& g, const Rat& m1_heavy) {
    long long t = rat_ceil(m1_heavy);
    if (g.edge_count() == 0)
        return {EdgeSet(g), EdgeSet(g), "forest(t=" + std::to_string(t) + ")"};
    std::vector<EdgeSet> forests = nash_williams(g);
    if (static_cast<long long>(forests.size()) > t + 1)
        throw InfeasibleError("split_forest_case needs ceil(m1(G)) <= t+1, got " +
                              std::to_string(forests.size()) + " forests");
    EdgeBipartition out{EdgeSet(g), EdgeSet(g), "forest(t=" + std::to_string(t) + ")"};
    for (std::size_t i = 0; i < forests.size(); ++i) {
        std::size_t blue_from = forests.size() > 2 ? forests.size() - 2 : 0;
        if (i < blue_from && static_cast<long long>(i) < t - 1)
            out.red |= forests[i];
        else
            out.blue |= forests[i];
    }
    if (one_density(g).value > Rat(0)) {
        if (!out.red.empty()) {
            Rat m1_red = one_density(edge_subgraph(g, out.red).graph).value;
            if (m1_red > Rat(t - 1)) throw InternalError("red side exceeds t-1 forests");
        }
        if (!out.blue.empty()) {
            Rat m1_blue = one_density(edge_subgraph(g, out.blue).graph).value;
            if (m1_blue > Rat(2)) throw InternalError("blue side exceeds two forests");
        }
    }
    return out;
}

bool is_st_avoiding(const Graph& g, const EdgeSet& s, int s_param, int t_param,
                    EdgeSet* st_core) {
    s.require_host(g);
    std::vector<char> edge_alive(g.edge_count(), 0);
    std::vector<int> deg(g.n, 0);
    for (int i : s.indices()) {
        edge_alive[i] = 1;
        ++deg[g.edges[i].first];
        ++deg[g.edges[i].second];
    }
    // Peel to the (s,t)-core: drop vertices of degree < s and edges whose
    // both endpoints have degree < t. Any (s,t)-subgraph survives peeling,
    // and a nonempty fixed point is itself an (s,t)-graph.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < g.edge_count(); ++i) {
            if (!edge_alive[i]) continue;
            auto [u, v] = g.edges[i];
            bool drop = deg[u] < s_param || deg[v] < s_param ||
                        (deg[u] < t_param && deg[v] < t_param);
            if (drop) {
                edge_alive[i] = 0;
                --deg[u];
                --deg[v];
                changed = true;
            }
        }
    }
    EdgeSet core(g);
    bool empty = true;
    for (int i = 0; i < g.edge_count(); ++i)
        if (edge_alive[i]) {
            core.add(i);
            empty = false;
        }
    if (!empty && st_core) *st_core = core;
    return empty;
}

StSplit split_st_case(const Graph& g, int s, int t) {
    if (s < 1 || t < s) throw DomainError("split_st_case needs 1 <= s <= t");
    std::vector<char> alive(g.edge_count(), 1);
    std::vector<int> deg(g.n, 0);
    for (auto [u, v] : g.edges) {
        ++deg[u];
        ++deg[v];
    }
    struct Action {
        bool vertex;         // else single-edge deletion
        int kept;            // edge to keep toward the forest
        std::vector<int> rest;  // remaining edges of the deleted vertex
    };
    std::vector<Action> log;
    long long remaining = g.edge_count();

    auto drop_edge = [&](int i) {
        alive[i] = 0;
        --deg[g.edges[i].first];
        --deg[g.edges[i].second];
        --remaining;
    };

    while (remaining > 0) {
        int low_vertex = -1;
        for (int v = 0; v < g.n && low_vertex < 0; ++v)
            if (deg[v] >= 1 && deg[v] <= s) low_vertex = v;
        if (low_vertex >= 0) {
            Action a{true, -1, {}};
            for (int i = 0; i < g.edge_count(); ++i) {
                if (!alive[i]) continue;
                auto [u, v] = g.edges[i];
                if (u != low_vertex && v != low_vertex) continue;
                if (a.kept < 0)
                    a.kept = i;
                else
                    a.rest.push_back(i);
                drop_edge(i);
            }
            log.push_back(std::move(a));
            continue;
        }
        int light_edge = -1;
        for (int i = 0; i < g.edge_count() && light_edge < 0; ++i)
            if (alive[i] && deg[g.edges[i].first] <= t && deg[g.edges[i].second] <= t)
                light_edge = i;
        if (light_edge >= 0) {
            drop_edge(light_edge);
            log.push_back({false, light_edge, {}});
            continue;
        }
        // Minimum degree > s and every edge has both endpoints of degree
        // > t: the remainder is an (s+1, t+1)-graph.
        EdgeSet cert(g);
        for (int i = 0; i < g.edge_count(); ++i)
            if (alive[i]) cert.add(i);
        return {false, {EdgeSet(g), EdgeSet(g), ""}, cert};
    }

    // Rebuild in reverse; the forest grows by union-find.
    StSplit out{true,
                {EdgeSet(g), EdgeSet(g), "st(" + std::to_string(s) + "," + std::to_string(t) + ")"},
                EdgeSet(g)};
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto add_to_forest = [&](int i) {
        int ru = find(g.edges[i].first), rv = find(g.edges[i].second);
        if (ru == rv) return false;
        parent[ru] = rv;
        out.parts.blue.add(i);
        return true;
    };
    for (auto it = log.rbegin(); it != log.rend(); ++it) {
        if (it->vertex) {
            if (!add_to_forest(it->kept))
                throw InternalError("pendant edge closed a forest cycle");
            for (int i : it->rest) out.parts.red.add(i);
        } else {
            if (!add_to_forest(it->kept)) out.parts.red.add(it->kept);
        }
    }
    if (!is_st_avoiding(g, out.parts.red, s, t))
        throw InternalError("st split produced a non-avoiding part");
    return out;
}

EdgeBipartition split_integer_case(const Graph& g, long long k) {
    if (k < 1) throw DomainError("split_integer_case needs k >= 1");
    Rat m = max_density(g).value;
    if (m > Rat(k))
        throw InfeasibleError("split_integer_case needs m(G) <= k, got m = " + rat_str(m));
    GraphicOracle graphic(g);
    SparsityOracle sparsity(g, static_cast<int>(k));
    PartitionOutcome out = matroid_partition2(g, graphic, sparsity);
    if (!out.success)
        throw InternalError("matroid partition returned a certificate despite m(G) <= k");
    EdgeBipartition parts{out.parts[1], out.parts[0], "integer(k=" + std::to_string(k) + ")"};
    if (!graphic_independent(g, parts.blue)) throw InternalError("forest side has a cycle");
    if (!parts.red.empty() && two_density(edge_subgraph(g, parts.red).graph).value > Rat(k))
        throw InternalError("sparsity side exceeds 2-density k");
    return parts;
}

namespace {

// k-colorability backtracking with a fixed vertex order (degree-descending)
// and new-color symmetry breaking.
bool colorable(const Graph& g, int k, std::vector<int>& order, int depth,
               std::vector<int>& color, int used) {
    if (depth == g.n) return true;
    int v = order[depth];
    int limit = std::min(k, used + 1);
    for (int c = 0; c < limit; ++c) {
        bool ok = true;
        for (int w : g.adj[v])
            if (color[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (colorable(g, k, order, depth + 1, color, std::max(used, c + 1))) return true;
        color[v] = -1;
    }
    return false;
}

}  // namespace

int chromatic_number(const Graph& g) {
    if (g.n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    std::vector<int> order(g.n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    // Greedy clique on the degree order gives the lower bound.
    std::vector<int> clique;
    for (int v : order) {
        bool ok = true;
        for (int w : clique)
            if (!g.has_edge(v, w)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    for (int k = static_cast<int>(clique.size());; ++k) {
        std::vector<int> color(g.n, -1);
        if (colorable(g, k, order, 0, color, 0)) return k;
    }
}

StrategyReport applicable_cases(const BalancedPair& pair) {
    StrategyReport rep{pair.alpha, true,  true, true, false,
                       false,      {},    {},   {},   std::nullopt,
                       Rat(rat_ceil(pair.alpha)), pair.m2_heavy};
    for (const Graph& l : pair.light.members) {
        rep.chi_light.push_back(chromatic_number(l));
        rep.m1_light.push_back(one_density(l).value);
    }
    for (const Graph& h : pair.heavy.members) rep.chi_heavy.push_back(chromatic_number(h));

    for (int chi : rep.chi_light) rep.case_a = rep.case_a && chi >= 3;
    for (int chi : rep.chi_heavy) rep.case_b = rep.case_b && Rat(chi) > pair.alpha + Rat(1);
    for (const Rat& m1 : rep.m1_light) rep.case_c = rep.case_c && m1 > Rat(2);

    int max_deg = 0;
    for (const Graph& h : pair.heavy.members)
        for (int v = 0; v < h.n; ++v) max_deg = std::max(max_deg, h.degree(v));
    for (int s = 2; s <= max_deg && !rep.st; ++s) {
        for (int t = s; t <= max_deg && !rep.st; ++t) {
            if (Rat(1, s + 1) + Rat(1, t + 1) >= Rat(1) / pair.alpha) continue;
            bool all = true;
            for (const Graph& h : pair.heavy.members)
                if (is_st_avoiding(h, EdgeSet::full(h), s, t)) {
                    all = false;
                    break;
                }
            if (all) rep.st = std::make_pair(s, t);
        }
    }
    rep.case_d = rep.st.has_value();
    rep.case_e = rep.ceil_alpha < pair.m2_heavy;
    return rep;
}

ColoringCheck verify_coloring(const Graph& g, const EdgeBipartition& parts,
                              const BalancedPair& pair) {
    parts.red.require_host(g);
    parts.blue.require_host(g);
    if (parts.red.intersects(parts.blue))
        throw DomainError("bipartition sides overlap");
    EdgeSet all = parts.red;
    all |= parts.blue;
    if (all.size() != g.edge_count()) throw DomainError("bipartition does not cover E(G)");
    for (int mi = 0; mi < pair.heavy.size(); ++mi) {
        if (auto copy = find_copy(g, pair.heavy.members[mi], &parts.red))
            return {false, 0, mi, *copy};
    }
    for (int mi = 0; mi < pair.light.size(); ++mi) {
        if (auto copy = find_copy(g, pair.light.members[mi], &parts.blue))
            return {false, 1, mi, *copy};
    }
    return {true, -1, -1, {}};
}

AntiRamseyOutcome anti_ramsey_coloring(const Graph& g, const BalancedPair& pair) {
    Rat m = max_density(g).value;
    if (m > pair.alpha)
        throw DomainError("anti_ramsey_coloring needs m(G) <= alpha, got m = " + rat_str(m));

    auto verified = [&](EdgeBipartition parts) -> AntiRamseyOutcome {
        ColoringCheck check = verify_coloring(g, parts, pair);
        if (!check.ok)
            throw InternalError("case " + parts.strategy + " produced an invalid coloring");
        return {true, std::move(parts), ""};
    };

    // Degenerate strategies first: a host without light (resp. heavy)
    // copies is colorable monochromatically.
    bool any_light = false, any_heavy = false;
    for (const Graph& l : pair.light.members) any_light = any_light || find_copy(g, l).has_value();
    for (const Graph& h : pair.heavy.members) any_heavy = any_heavy || find_copy(g, h).has_value();
    if (!any_light) return verified({EdgeSet(g), EdgeSet::full(g), "all-blue"});
    if (!any_heavy) return verified({EdgeSet::full(g), EdgeSet(g), "all-red"});

    StrategyReport rep = applicable_cases(pair);
    if (rep.case_e) return verified(split_integer_case(g, rat_ceil(pair.alpha)));
    if (rep.case_b) return verified(split_chromatic_case(g, static_cast<int>(rat_floor(pair.alpha)) + 1));
    if (rep.case_a) return verified(split_bipartite_case(g, static_cast<int>(rat_floor(pair.alpha)) + 1));
    if (rep.case_c) {
        Rat m1_heavy = one_density(pair.heavy.members[0]).value;
        for (const Graph& h : pair.heavy.members) m1_heavy = std::min(m1_heavy, one_density(h).value);
        return verified(split_forest_case(g, m1_heavy));
    }
    if (rep.case_d) {
        StSplit split = split_st_case(g, rep.st->first, rep.st->second);
        if (!split.success)
            throw InternalError("st split certificate contradicts m(G) <= alpha");
        return verified(std::move(split.parts));
    }
    return {false, {EdgeSet(g), EdgeSet(g), ""}, "no deterministic case applies to the pair"};
}

namespace {

// Does some edge subset within `edges` (as a subgraph of g) have 2-density
// above target? Early-exit scan over vertex subsets.
bool m2_exceeds(const Graph& g, const EdgeSet& edges, const Rat& target) {
    if (edges.empty()) return Rat(0) > target;
    Subgraph sub = edge_subgraph(g, edges);
    return two_density(sub.graph).value > target;
}

}  // namespace

ConjectureOutcome conjecture_search(const Graph& g, int edge_budget) {
    if (g.edge_count() > edge_budget)
        throw BudgetError("conjecture search edge budget exceeded: " +
                              std::to_string(g.edge_count()) + " > " +
                              std::to_string(edge_budget),
                          edge_budget);
    ConjectureOutcome out{false, EdgeSet(g), Rat(0), Rat(0), 0};
    if (g.n == 0) throw DomainError("conjecture search needs a vertex");
    out.target = max_density(g).value;
    if (g.edge_count() == 0) {
        out.found = true;
        return out;
    }

    auto finish = [&](const EdgeSet& forest) {
        EdgeSet complement = forest.complement();
        Rat m2 = complement.empty() ? Rat(0)
                                    : two_density(edge_subgraph(g, complement).graph).value;
        if (m2 > out.target) throw InternalError("conjecture verification failed");
        if (!graphic_independent(g, forest)) throw InternalError("conjecture forest has a cycle");
        out.found = true;
        out.forest = forest;
        out.complement_m2 = m2;
        return out;
    };

    // Integer densities are covered constructively by the matroid split.
    if (rat_is_integer(out.target) && out.target >= Rat(1)) {
        EdgeBipartition parts = split_integer_case(g, out.target.numerator());
        return finish(parts.blue);
    }

    // Greedy: repeatedly move a witness edge of the complement's densest
    // subgraph into the forest.
    {
        EdgeSet forest(g);
        while (true) {
            EdgeSet complement = forest.complement();
            if (complement.empty()) return finish(forest);
            Density d2 = two_density(edge_subgraph(g, complement).graph);
            if (d2.value <= out.target) return finish(forest);
            Subgraph sub = edge_subgraph(g, complement);
            bool extended = false;
            for (int wi : d2.witness.indices()) {
                auto [su, sv] = sub.graph.edges[wi];
                int host_edge = g.edge_index(sub.vertex_map[su], sub.vertex_map[sv]);
                EdgeSet trial = forest;
                trial.add(host_edge);
                if (graphic_independent(g, trial)) {
                    forest = std::move(trial);
                    extended = true;
                    break;
                }
            }
            if (!extended) break;  // witness fully spanned; fall through to exhaustive
        }
    }

    // Exhaustive search over maximal forests. Monotonicity (larger forests
    // only shrink the complement) means maximal forests decide the answer.
    struct Searcher {
        const Graph& g;
        const Rat& target;
        long long tried = 0;
        std::vector<int> forest, excluded;
        std::optional<std::vector<int>> found;

        Searcher(const Graph& g_, const Rat& t) : g(g_), target(t) {}

        bool spanning_feasible(int next) const {
            // Can forest + edges >= next still reach every component?
            std::vector<int> parent(g.n);
            std::iota(parent.begin(), parent.end(), 0);
            auto find = [&](int x) {
                while (parent[x] != x) x = parent[x] = parent[parent[x]];
                return x;
            };
            int merges = 0;
            for (int i : forest)
                if (find(g.edges[i].first) != find(g.edges[i].second)) {
                    parent[find(g.edges[i].first)] = find(g.edges[i].second);
                    ++merges;
                }
            for (int i = next; i < g.edge_count(); ++i)
                if (find(g.edges[i].first) != find(g.edges[i].second)) {
                    parent[find(g.edges[i].first)] = find(g.edges[i].second);
                    ++merges;
                }
            EdgeSet all = EdgeSet::full(g);
            return merges == all.incident_vertex_count() - all.component_count();
        }

        bool rec(int idx) {
            if (found) return true;
            if (idx == g.edge_count()) {
                ++tried;
                EdgeSet comp(g);
                for (int i : excluded) comp.add(i);
                Rat m2 = comp.empty() ? Rat(0)
                                      : two_density(edge_subgraph(g, comp).graph).value;
                if (m2 <= target) {
                    found = forest;
                    return true;
                }
                return false;
            }
            EdgeSet trial = EdgeSet::of(g, forest);
            trial.add(idx);
            if (graphic_independent(g, trial)) {
                forest.push_back(idx);
                if (rec(idx + 1)) return true;
                forest.pop_back();
            }
            excluded.push_back(idx);
            EdgeSet comp = EdgeSet::of(g, excluded);
            bool viable = !m2_exceeds(g, comp, target) && spanning_feasible(idx + 1);
            if (viable && rec(idx + 1)) return true;
            excluded.pop_back();
            return false;
        }
    } searcher(g, out.target);

    searcher.rec(0);
    out.forests_tried = searcher.tried;
    if (searcher.found) return finish(EdgeSet::of(g, *searcher.found));
    return out;  // verified NONE: every maximal forest exhausted
}

}  // namespace ramseylab
