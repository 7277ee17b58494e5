#include "ramseylab/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "ramseylab/copies.hpp"
#include "ramseylab/kernels/maskscan.hpp"

namespace ramseylab {

namespace {

bool copy_lex_less(const std::vector<int>& a, const std::vector<int>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// ---------------------------------------------------------------------------
// Backtracking 2..r-coloring engine over explicit copy lists.
//
// Only edges lying in at least one copy are branching variables; everything
// else can take color 0 freely. Search state per copy: how many of its edges
// carry its color and how many carry another. A copy with all-but-one edges
// in its color and none in another forbids that color on its last edge
// (and a forced singleton domain is assigned eagerly).
// ---------------------------------------------------------------------------

struct EngineCopy {
    int color;
    std::vector<int> edges;  // active-edge ids
    int size;
};

class ColoringEngine {
  public:
    // copies_by_color[c] lists the copies that must not become mono in c.
    ColoringEngine(int r, const std::vector<std::vector<std::vector<int>>>& copies_by_color,
                   long long node_budget, int rotate = 0,
                   const std::atomic<bool>* cancel = nullptr)
        : r_(r), budget_(node_budget), rotate_(rotate), cancel_(cancel) {
        std::map<int, int> remap;
        for (const auto& list : copies_by_color)
            for (const auto& c : list)
                for (int e : c) remap.emplace(e, 0);
        active_.reserve(remap.size());
        for (auto& [e, id] : remap) {
            id = static_cast<int>(active_.size());
            active_.push_back(e);
        }
        for (int c = 0; c < r; ++c) {
            for (const auto& copy : copies_by_color[c]) {
                EngineCopy ec{c, {}, static_cast<int>(copy.size())};
                for (int e : copy) ec.edges.push_back(remap[e]);
                copies_.push_back(std::move(ec));
            }
        }
        int m = static_cast<int>(active_.size());
        at_.assign(m, {});
        for (std::size_t p = 0; p < copies_.size(); ++p)
            for (int e : copies_[p].edges) at_[e].push_back(static_cast<int>(p));
        color_.assign(m, -1);
        domain_.assign(m, (r >= 31) ? ~0u : ((1u << r) - 1));
        same_.assign(copies_.size(), 0);
        diff_.assign(copies_.size(), 0);
    }

    int active_count() const { return static_cast<int>(active_.size()); }

    RamseyResult::Verdict solve() {
        // Copies of size one make their color immediately unavailable.
        for (std::size_t p = 0; p < copies_.size(); ++p) {
            if (copies_[p].size == 1) {
                int e = copies_[p].edges[0];
                domain_[e] &= ~(1u << copies_[p].color);
                if (domain_[e] == 0) return RamseyResult::Verdict::ramsey;
            }
        }
        switch (search()) {
            case Outcome::solution: return RamseyResult::Verdict::not_ramsey;
            case Outcome::exhausted: return RamseyResult::Verdict::ramsey;
            default: return RamseyResult::Verdict::budget;
        }
    }

    // Host-edge colors of the found solution; uncovered edges get color 0.
    std::vector<int> witness(int host_edges) const {
        std::vector<int> out(host_edges, 0);
        for (std::size_t i = 0; i < active_.size(); ++i)
            out[active_[i]] = color_[i] < 0 ? 0 : color_[i];
        return out;
    }

    long long nodes = 0;

  private:
    enum class Outcome { solution, exhausted, budget };
    enum class Op : int { set_color, same_inc, diff_inc, domain };

    struct Trail {
        Op op;
        int a;
        unsigned b;
    };

    bool assign(int e, int c, std::vector<std::pair<int, int>>& pending) {
        trail_.push_back({Op::set_color, e, 0});
        color_[e] = c;
        for (int p : at_[e]) {
            if (copies_[p].color == c) {
                trail_.push_back({Op::same_inc, p, 0});
                if (++same_[p] == copies_[p].size) return false;  // mono copy
            } else {
                trail_.push_back({Op::diff_inc, p, 0});
                ++diff_[p];
            }
        }
        // Unit rule on copies through e that are one edge short of mono.
        for (int p : at_[e]) {
            if (copies_[p].color != c || diff_[p] != 0 || same_[p] != copies_[p].size - 1)
                continue;
            for (int f : copies_[p].edges) {
                if (color_[f] >= 0) continue;
                unsigned old = domain_[f];
                if (!(old & (1u << c))) break;
                trail_.push_back({Op::domain, f, old});
                domain_[f] = old & ~(1u << c);
                if (domain_[f] == 0) return false;
                if (std::popcount(domain_[f]) == 1)
                    pending.emplace_back(f, std::countr_zero(domain_[f]));
                break;
            }
        }
        return true;
    }

    bool propagate(std::vector<std::pair<int, int>> pending) {
        while (!pending.empty()) {
            auto [e, c] = pending.back();
            pending.pop_back();
            if (color_[e] >= 0) continue;  // already forced equal (singleton domain)
            if (!assign(e, c, pending)) return false;
        }
        return true;
    }

    void undo_to(std::size_t mark) {
        while (trail_.size() > mark) {
            Trail t = trail_.back();
            trail_.pop_back();
            switch (t.op) {
                case Op::set_color: color_[t.a] = -1; break;
                case Op::same_inc: --same_[t.a]; break;
                case Op::diff_inc: --diff_[t.a]; break;
                case Op::domain: domain_[t.a] = t.b; break;
            }
        }
    }

    int pick_edge() const {
        int best = -1, best_threat = -1;
        int m = static_cast<int>(active_.size());
        for (int i = 0; i < m; ++i) {
            int e = (i + rotate_) % m;
            if (color_[e] >= 0) continue;
            int threat = 0;
            for (int p : at_[e]) threat += diff_[p] == 0;
            if (threat > best_threat) {
                best_threat = threat;
                best = e;
            }
        }
        return best;
    }

    Outcome search() {
        if (budget_ >= 0 && nodes > budget_) return Outcome::budget;
        if (cancel_ && cancel_->load(std::memory_order_relaxed)) return Outcome::budget;
        int e = pick_edge();
        if (e < 0) return Outcome::solution;
        for (int c = 0; c < r_; ++c) {
            if (!(domain_[e] & (1u << c))) continue;
            ++nodes;
            std::size_t mark = trail_.size();
            std::vector<std::pair<int, int>> pending;
            if (assign(e, c, pending) && propagate(std::move(pending))) {
                Outcome sub = search();
                if (sub != Outcome::exhausted) return sub;
            }
            undo_to(mark);
        }
        return Outcome::exhausted;
    }

    int r_;
    long long budget_;
    int rotate_;
    const std::atomic<bool>* cancel_;
    std::vector<int> active_;  // active id -> host edge index
    std::vector<EngineCopy> copies_;
    std::vector<std::vector<int>> at_;
    std::vector<int> color_;
    std::vector<unsigned> domain_;
    std::vector<int> same_, diff_;
    std::vector<Trail> trail_;
};

// Monochromatic-copy check used to verify every witness before returning:
// single-word mask scans over the copy lists.
bool witness_valid(const Graph& g, const std::vector<int>& colors,
                   const std::vector<std::vector<std::vector<int>>>& copies_by_color) {
    if (g.edge_count() <= 64) {
        for (int c = 0; c < static_cast<int>(copies_by_color.size()); ++c) {
            std::uint64_t color_mask = 0;
            for (int e = 0; e < g.edge_count(); ++e)
                if (colors[e] == c) color_mask |= 1ULL << e;
            std::vector<std::uint64_t> masks;
            for (const auto& copy : copies_by_color[c]) {
                std::uint64_t m = 0;
                for (int e : copy) m |= 1ULL << e;
                masks.push_back(m);
            }
            if (kernels::find_first_subset(masks.data(), masks.size(), color_mask) !=
                kernels::npos)
                return false;
        }
        return true;
    }
    for (int c = 0; c < static_cast<int>(copies_by_color.size()); ++c) {
        for (const auto& copy : copies_by_color[c]) {
            bool mono = true;
            for (int e : copy)
                if (colors[e] != c) {
                    mono = false;
                    break;
                }
            if (mono) return false;
        }
    }
    return true;
}

RamseyResult run_engine(const Graph& g,
                        const std::vector<std::vector<std::vector<int>>>& copies_by_color,
                        long long node_budget, int rotate = 0,
                        const std::atomic<bool>* cancel = nullptr) {
    int r = static_cast<int>(copies_by_color.size());
    ColoringEngine engine(r, copies_by_color, node_budget, rotate, cancel);
    RamseyResult out{RamseyResult::Verdict::ramsey, {}, 0, ""};
    out.verdict = engine.solve();
    out.nodes = engine.nodes;
    if (out.verdict == RamseyResult::Verdict::not_ramsey) {
        out.witness.colors = engine.witness(g.edge_count());
        if (!witness_valid(g, out.witness.colors, copies_by_color))
            throw InternalError("ramsey witness failed verification");
    } else if (out.verdict == RamseyResult::Verdict::budget) {
        out.note = "node budget exhausted";
    }
    return out;
}

std::vector<std::vector<std::vector<int>>> copies_by_color_for(
    const Graph& g, const std::vector<GraphFamily>& families) {
    std::vector<std::vector<std::vector<int>>> out;
    for (const GraphFamily& fam : families) {
        std::vector<Copy> copies = family_copies(g, fam);
        std::vector<std::vector<int>> plain;
        for (Copy& c : copies) plain.push_back(std::move(c.edges));
        out.push_back(std::move(plain));
    }
    return out;
}

}  // namespace

std::vector<Copy> family_copies(const Graph& g, const GraphFamily& family) {
    std::set<std::vector<int>> seen;
    std::vector<Copy> out;
    for (int mi = 0; mi < family.size(); ++mi) {
        for (auto& copy : enumerate_copies(g, family.members[mi]))
            if (seen.insert(copy).second) out.push_back({copy, mi});
    }
    std::sort(out.begin(), out.end(),
              [](const Copy& a, const Copy& b) { return copy_lex_less(a.edges, b.edges); });
    return out;
}

RamseyResult ramsey_decide(const Graph& g, const std::vector<GraphFamily>& families,
                           long long node_budget) {
    if (families.empty()) throw DomainError("ramsey_decide needs at least one family");
    return run_engine(g, copies_by_color_for(g, families), node_budget);
}

RamseyResult tuple_ramsey_decide(const Graph& g, const std::vector<EdgeSet>& f_h,
                                 const std::vector<EdgeSet>& f_l, long long node_budget) {
    std::vector<std::vector<std::vector<int>>> by_color(2);
    for (const EdgeSet& s : f_h) {
        s.require_host(g);
        by_color[0].push_back(s.indices());
    }
    for (const EdgeSet& s : f_l) {
        s.require_host(g);
        by_color[1].push_back(s.indices());
    }
    return run_engine(g, by_color, node_budget);
}

RamseyResult ramsey_decide_portfolio(const Graph& g, const std::vector<GraphFamily>& families,
                                     int workers, long long node_budget) {
    if (workers < 1) throw DomainError("portfolio needs workers >= 1");
    auto by_color = copies_by_color_for(g, families);
    std::atomic<bool> cancel{false};
    std::vector<std::optional<RamseyResult>> results(workers);
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
            RamseyResult r = run_engine(g, by_color, node_budget, w * 7 + 1, &cancel);
            if (r.verdict != RamseyResult::Verdict::budget) {
                results[w] = std::move(r);
                cancel.store(true, std::memory_order_relaxed);
            } else {
                results[w] = std::move(r);
            }
        });
    }
    for (auto& t : threads) t.join();
    // Any completed verdict is the exact answer; prefer the lowest worker id
    // that finished (the content of the decision is order-independent).
    for (auto& r : results)
        if (r && r->verdict != RamseyResult::Verdict::budget) return *r;
    return *results[0];
}

Graph minimal_ramsey_subgraph(const Graph& g, const std::vector<GraphFamily>& families,
                              long long node_budget) {
    RamseyResult base = ramsey_decide(g, families, node_budget);
    if (base.verdict == RamseyResult::Verdict::budget)
        throw BudgetError("budget exhausted deciding the input graph", node_budget);
    if (base.verdict != RamseyResult::Verdict::ramsey)
        throw DomainError("minimal_ramsey_subgraph needs a Ramsey input graph");
    std::vector<std::pair<int, int>> edges = g.edges;
    // One ascending pass suffices: Ramsey-ness is monotone under edge
    // removal, so an edge whose deletion broke it once never becomes
    // deletable later.
    for (const auto& edge : g.edges) {
        std::vector<std::pair<int, int>> trial;
        for (const auto& e : edges)
            if (e != edge) trial.push_back(e);
        Graph candidate = Graph::from_edges(g.n, trial);
        RamseyResult r = ramsey_decide(candidate, families, node_budget);
        if (r.verdict == RamseyResult::Verdict::budget)
            throw BudgetError("budget exhausted during minimization", node_budget);
        if (r.verdict == RamseyResult::Verdict::ramsey) edges = std::move(trial);
    }
    return Graph::from_edges(g.n, edges);
}

namespace {

std::vector<EdgeSet> to_edge_sets(const Graph& g, const std::vector<Copy>& copies) {
    std::vector<EdgeSet> out;
    for (const Copy& c : copies) out.push_back(EdgeSet::of(g, c.edges));
    return out;
}

std::uint64_t copy_mask(const Copy& c) {
    std::uint64_t m = 0;
    for (int e : c.edges) m |= 1ULL << e;
    return m;
}

// Single-edge-intersection partner condition from one list into another.
bool partners_ok(const Graph& g, const std::vector<Copy>& from, const std::vector<Copy>& into,
                 std::string& detail) {
    std::vector<std::uint64_t> into_masks;
    for (const Copy& c : into) into_masks.push_back(copy_mask(c));
    for (std::size_t ci = 0; ci < from.size(); ++ci) {
        std::uint64_t fm = copy_mask(from[ci]);
        for (int e : from[ci].edges) {
            if (kernels::find_first_intersection_equal(into_masks.data(), into_masks.size(), fm,
                                                       1ULL << e) == kernels::npos) {
                detail = "copy #" + std::to_string(ci) + " edge " + std::to_string(e) +
                         " has no single-edge partner";
                (void)g;
                return false;
            }
        }
    }
    return true;
}

bool hypergraph_connected_spanning(const Graph& g, const std::vector<const Copy*>& copies,
                                   std::string& detail) {
    if (g.edge_count() == 0) {
        detail = "host graph has no edges";
        return false;
    }
    if (copies.empty()) {
        detail = "no copies";
        return false;
    }
    // Union-find over copies sharing edges; also track edge coverage.
    std::vector<int> owner(g.edge_count(), -1);
    std::vector<int> parent(copies.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < copies.size(); ++i) {
        for (int e : copies[i]->edges) {
            if (owner[e] < 0)
                owner[e] = static_cast<int>(i);
            else
                parent[find(static_cast<int>(i))] = find(owner[e]);
        }
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (owner[e] < 0) {
            detail = "edge " + std::to_string(e) + " lies in no copy";
            return false;
        }
    int root = find(0);
    for (std::size_t i = 1; i < copies.size(); ++i)
        if (find(static_cast<int>(i)) != root) {
            detail = "copy hypergraph is disconnected";
            return false;
        }
    return true;
}

}  // namespace

CoreCheck is_core(const CoreTuple& core) {
    if (core.g.edge_count() > 64)
        throw DomainError("core validation supports hosts with at most 64 edges");
    std::string detail;
    std::vector<const Copy*> all;
    for (const Copy& c : core.f_h) all.push_back(&c);
    for (const Copy& c : core.f_l) all.push_back(&c);
    if (!hypergraph_connected_spanning(core.g, all, detail)) return {false, 1, detail};
    if (!partners_ok(core.g, core.f_h, core.f_l, detail)) return {false, 2, detail};
    if (!partners_ok(core.g, core.f_l, core.f_h, detail)) return {false, 3, detail};
    return {true, 0, ""};
}

CoreTuple extract_core(const Graph& g, const BalancedPair& pair, long long node_budget) {
    std::vector<GraphFamily> fams = {pair.heavy, pair.light};
    RamseyResult base = ramsey_decide(g, fams, node_budget);
    if (base.verdict == RamseyResult::Verdict::budget)
        throw BudgetError("budget exhausted deciding the input graph", node_budget);
    if (base.verdict != RamseyResult::Verdict::ramsey)
        throw DomainError("extract_core needs a minimally Ramsey graph (input is not Ramsey)");
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<std::pair<int, int>> trial;
        for (int i = 0; i < g.edge_count(); ++i)
            if (i != e) trial.push_back(g.edges[i]);
        if (ramsey_decide(Graph::from_edges(g.n, trial), fams, node_budget).verdict ==
            RamseyResult::Verdict::ramsey)
            throw DomainError("extract_core needs a minimally Ramsey graph (edge " +
                              std::to_string(e) + " is removable)");
    }

    CoreTuple core{g, family_copies(g, pair.heavy), family_copies(g, pair.light), pair.heavy,
                   pair.light};
    auto still_ramsey = [&](const std::vector<Copy>& fh, const std::vector<Copy>& fl) {
        RamseyResult r =
            tuple_ramsey_decide(g, to_edge_sets(g, fh), to_edge_sets(g, fl), node_budget);
        if (r.verdict == RamseyResult::Verdict::budget)
            throw BudgetError("budget exhausted during core extraction", node_budget);
        return r.verdict == RamseyResult::Verdict::ramsey;
    };
    // Greedy minimization, dropping the lexicographically largest copy first.
    for (int list = 0; list < 2; ++list) {
        std::vector<Copy>& mine = list == 0 ? core.f_h : core.f_l;
        for (int i = static_cast<int>(mine.size()) - 1; i >= 0; --i) {
            std::vector<Copy> trial = mine;
            trial.erase(trial.begin() + i);
            bool ok = list == 0 ? still_ramsey(trial, core.f_l) : still_ramsey(core.f_h, trial);
            if (ok) mine = std::move(trial);
        }
    }
    CoreCheck check = is_core(core);
    if (!check.ok)
        throw InternalError("extracted minimal Ramsey tuple is not a core: " + check.detail);
    return core;
}

CoreTuple merge_three_color_core(const Graph& g, const GraphFamily& h1, const GraphFamily& h2,
                                 const GraphFamily& h3, const std::vector<Copy>& f1,
                                 const std::vector<Copy>& f2, const std::vector<Copy>& f3) {
    if (g.edge_count() > 64)
        throw DomainError("core validation supports hosts with at most 64 edges");
    std::string detail;
    std::vector<const Copy*> all;
    for (const Copy& c : f1) all.push_back(&c);
    for (const Copy& c : f2) all.push_back(&c);
    for (const Copy& c : f3) all.push_back(&c);
    if (!hypergraph_connected_spanning(g, all, detail))
        throw DomainError("three-color core condition 1 fails: " + detail);
    const std::vector<Copy>* lists[3] = {&f1, &f2, &f3};
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
            if (i == j || lists[j]->empty()) continue;  // empty lists are vacuous partners
            if (!partners_ok(g, *lists[i], *lists[j], detail))
                throw DomainError("three-color core condition fails (" + std::to_string(i + 1) +
                                  " -> " + std::to_string(j + 1) + "): " + detail);
        }
    }
    std::vector<Graph> light_members = h2.members;
    light_members.insert(light_members.end(), h3.members.begin(), h3.members.end());
    GraphFamily light(light_members, h2.name + "+" + h3.name);
    std::vector<Copy> f23 = f2;
    for (Copy c : f3) {
        c.member += h2.size();
        f23.push_back(std::move(c));
    }
    std::sort(f23.begin(), f23.end(),
              [](const Copy& a, const Copy& b) { return copy_lex_less(a.edges, b.edges); });
    CoreTuple merged{g, f1, std::move(f23), h1, light};
    CoreCheck check = is_core(merged);
    if (!check.ok) throw InternalError("merged three-color core fails validation: " + check.detail);
    return merged;
}

}  // namespace ramseylab
