#include "ramseylab/copies.hpp"

#include <algorithm>
#include <set>

namespace ramseylab {

namespace {

// Backtracking embedding search with degree and adjacency pruning. Pattern
// vertices are placed in a connectivity-first order so edge constraints
// bind as early as possible.
class CopySearch {
  public:
    CopySearch(const Graph& g, const Graph& pattern, const EdgeSet* allowed, bool first_only)
        : g_(g), pat_(pattern), allowed_(allowed), first_only_(first_only) {
        if (allowed_) allowed_->require_host(g);
        deg_.assign(g.n, 0);
        if (allowed_) {
            for (int i : allowed_->indices()) {
                ++deg_[g.edges[i].first];
                ++deg_[g.edges[i].second];
            }
        } else {
            for (int v = 0; v < g.n; ++v) deg_[v] = g.degree(v);
        }
        order_ = placement_order(pattern);
        map_.assign(pat_.n, -1);
        used_.assign(g.n, 0);
    }

    void run() {
        if (pat_.n <= g_.n) rec(0);
    }

    std::set<std::vector<int>> copies;

  private:
    static std::vector<int> placement_order(const Graph& p) {
        std::vector<int> order;
        std::vector<char> placed(p.n, 0);
        for (int step = 0; step < p.n; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < p.n; ++v) {
                if (placed[v]) continue;
                int links = 0;
                for (int w : p.adj[v]) links += placed[w];
                if (links > best_links || (links == best_links && p.degree(v) > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = p.degree(v);
                }
            }
            placed[best] = 1;
            order.push_back(best);
        }
        return order;
    }

    bool edge_ok(int gu, int gv) const {
        int idx = g_.edge_index(gu, gv);
        if (idx < 0) return false;
        return !allowed_ || allowed_->contains(idx);
    }

    bool rec(int depth) {
        if (depth == pat_.n) {
            std::vector<int> copy;
            for (auto [u, v] : pat_.edges) copy.push_back(g_.edge_index(map_[u], map_[v]));
            std::sort(copy.begin(), copy.end());
            copies.insert(std::move(copy));
            return first_only_;
        }
        int pv = order_[depth];
        for (int cand = 0; cand < g_.n; ++cand) {
            if (used_[cand] || deg_[cand] < pat_.degree(pv)) continue;
            bool ok = true;
            for (int pw : pat_.adj[pv]) {
                if (map_[pw] >= 0 && !edge_ok(cand, map_[pw])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_[pv] = cand;
            used_[cand] = 1;
            bool done = rec(depth + 1);
            map_[pv] = -1;
            used_[cand] = 0;
            if (done) return true;
        }
        return false;
    }

    const Graph& g_;
    const Graph& pat_;
    const EdgeSet* allowed_;
    bool first_only_;
    std::vector<int> deg_;
    std::vector<int> order_;
    std::vector<int> map_;
    std::vector<char> used_;
};

}  // namespace

std::vector<std::vector<int>> enumerate_copies(const Graph& g, const Graph& pattern) {
    if (pattern.edge_count() == 0) throw DomainError("pattern needs at least one edge");
    CopySearch search(g, pattern, nullptr, false);
    search.run();
    return {search.copies.begin(), search.copies.end()};
}

std::optional<std::vector<int>> find_copy(const Graph& g, const Graph& pattern,
                                          const EdgeSet* allowed) {
    if (pattern.edge_count() == 0) throw DomainError("pattern needs at least one edge");
    CopySearch search(g, pattern, allowed, true);
    search.run();
    if (search.copies.empty()) return std::nullopt;
    return *search.copies.begin();
}

}  // namespace ramseylab
