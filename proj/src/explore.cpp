#include "ramseylab/explore.hpp"

#include <algorithm>
#include <bit>

#include "ramseylab/kernels/maskscan.hpp"

namespace ramseylab {

namespace {

long long edges_in_vertex_subset(const Graph& g, std::uint64_t vmask) {
    long long e = 0;
    for (auto [u, v] : g.edges)
        if (((vmask >> u) & 1) && ((vmask >> v) & 1)) ++e;
    return e;
}

}  // namespace

Rat compute_delta1(const GraphFamily& heavy, const Rat& alpha, bool require_positive) {
    bool first = true;
    Rat best(0);
    for (const Graph& h : heavy.members) {
        if (h.n > 20) throw DomainError("family member too large for the slack scan");
        // F = H minus one edge (same support) contributes slack exactly 1;
        // all other proper subgraphs are dominated by induced ones.
        Rat member_best(1);
        std::uint64_t full = (1ULL << h.n) - 1;
        for (std::uint64_t s = 1; s < full; ++s) {
            int v = std::popcount(s);
            if (v < 2) continue;
            Rat slack = Rat(h.edge_count() - edges_in_vertex_subset(h, s)) -
                        alpha * Rat(h.n - v);
            if (slack < member_best) member_best = slack;
        }
        if (first || member_best < best) best = member_best;
        first = false;
    }
    if (require_positive && best <= Rat(0))
        throw DomainError("slack delta1 = " + rat_str(best) +
                          " is not positive: family is not strictly mixed-balanced at alpha");
    return best;
}

Rat compute_x(const GraphFamily& heavy, const Rat& alpha) {
    bool first = true;
    Rat best(0);
    for (const Graph& h : heavy.members) {
        Rat x = Rat(h.edge_count() - 1) - alpha * Rat(h.n - 2);
        if (first || x < best) best = x;
        first = false;
    }
    return best;
}

ExplorationConfig make_config(const BalancedPair& pair, int vertex_cap,
                              std::optional<long long> gamma_override) {
    if (vertex_cap < 1) throw DomainError("vertex cap must be positive");
    ExplorationConfig cfg;
    cfg.alpha = pair.alpha;
    cfg.vertex_cap = vertex_cap;
    cfg.delta1 = compute_delta1(pair.heavy, pair.alpha, !pair.relaxed);
    cfg.x_value = compute_x(pair.heavy, pair.alpha);
    if (cfg.x_value < pair.alpha / pair.m2_light - Rat(1))
        throw InternalError("X < alpha/m2(light) - 1; slack computation inconsistent");
    if (gamma_override) {
        if (*gamma_override < 1) throw DomainError("gamma must be positive");
        cfg.gamma = *gamma_override;
    } else {
        Rat delta = std::min(cfg.delta1, Rat(1));
        if (delta <= Rat(0))
            throw DomainError("relaxed pair has no positive delta; supply gamma explicitly");
        cfg.gamma = rat_ceil(Rat(2) * cfg.alpha / delta);
    }
    return cfg;
}

Rat balance(const EdgeSet& s, const Rat& alpha) {
    if (s.empty()) throw DomainError("balance of an empty edge set");
    return Rat(s.size()) - alpha * Rat(s.incident_vertex_count());
}

namespace {

// Mask-based walk state over a core with <= 64 edges and <= 64 vertices.
class Walker {
  public:
    Walker(const CoreTuple& core, const ExplorationConfig& cfg) : core_(core), cfg_(cfg) {
        const Graph& g = core.g;
        if (g.edge_count() > 64 || g.n > 64)
            throw DomainError("exploration supports cores with at most 64 edges and vertices");
        if (g.edge_count() == 0) throw DomainError("exploration needs an edge");
        fh_ = core.f_h;
        fl_ = core.f_l;
        auto lex = [](const Copy& a, const Copy& b) {
            return std::lexicographical_compare(a.edges.begin(), a.edges.end(), b.edges.begin(),
                                                b.edges.end());
        };
        std::sort(fh_.begin(), fh_.end(), lex);
        std::sort(fl_.begin(), fl_.end(), lex);
        for (const Copy& c : fh_) fh_masks_.push_back(mask_of(c));
        for (const Copy& c : fl_) fl_masks_.push_back(mask_of(c));
        edge_vmask_.resize(g.edge_count());
        for (int i = 0; i < g.edge_count(); ++i)
            edge_vmask_[i] = (1ULL << g.edges[i].first) | (1ULL << g.edges[i].second);
        arrival_.assign(g.edge_count(), -1);
    }

    ExplorationTrace run() {
        ExplorationTrace trace{core_, cfg_, 0, {}, StopReason::exhausted, {}};
        explored_ = 1ULL << 0;  // the lexicographically smallest edge
        arrival_[0] = 0;
        std::uint64_t all = (core_.g.edge_count() == 64)
                                ? ~0ULL
                                : ((1ULL << core_.g.edge_count()) - 1);
        long long degenerate_steps = 0;
        int step_index = 0;
        while (true) {
            if (vertex_count() >= cfg_.vertex_cap) {
                trace.stop_reason = StopReason::vertex_cap;
                break;
            }
            if (explored_ == all) {
                trace.stop_reason = StopReason::exhausted;
                break;
            }
            if (degenerate_steps >= cfg_.gamma) {
                trace.stop_reason = StopReason::gamma_degenerate;
                break;
            }
            ++step_index;
            StepRecord rec = make_step(step_index);
            if (rec.kind != StepKind::pristine) ++degenerate_steps;
            trace.steps.push_back(std::move(rec));
        }
        for (int e = 0; e < core_.g.edge_count(); ++e)
            if ((explored_ >> e) & 1) trace.final_edges.push_back(e);
        return trace;
    }

  private:
    std::uint64_t mask_of(const Copy& c) const {
        std::uint64_t m = 0;
        for (int e : c.edges) m |= 1ULL << e;
        return m;
    }

    std::uint64_t vertices_of_mask(std::uint64_t edge_mask) const {
        std::uint64_t v = 0;
        while (edge_mask) {
            int e = std::countr_zero(edge_mask);
            edge_mask &= edge_mask - 1;
            v |= edge_vmask_[e];
        }
        return v;
    }

    int vertex_count() const { return std::popcount(vertices_of_mask(explored_)); }

    Rat balance_now() const {
        return Rat(std::popcount(explored_)) - cfg_.alpha * Rat(vertex_count());
    }

    // Smallest heavy partner meeting the light copy exactly at `edge`.
    // Existence is the core's third condition; absence is a fixture defect.
    int partner_for(std::uint64_t light_mask, int edge) const {
        std::size_t idx = kernels::find_first_intersection_equal(
            fh_masks_.data(), fh_masks_.size(), light_mask, 1ULL << edge);
        if (idx == kernels::npos)
            throw CoreViolationError("edge " + std::to_string(edge) +
                                         " of a light copy has no single-edge heavy partner",
                                     edge);
        if (fh_masks_[idx] & explored_)
            throw InternalError("heavy partner intersects the explored graph");
        return static_cast<int>(idx);
    }

    struct LightCandidate {
        int copy_index;
        std::vector<int> new_edges;
        std::vector<int> partner_index;  // per new edge
        bool regular;
        bool pristine;
        int root;  // meaningful iff regular
    };

    LightCandidate analyze_light(int li) const {
        LightCandidate cand{li, {}, {}, false, false, -1};
        std::uint64_t lmask = fl_masks_[li];
        std::uint64_t overlap = lmask & explored_;
        cand.regular = std::popcount(overlap) == 1;
        if (cand.regular) cand.root = std::countr_zero(overlap);
        std::uint64_t fresh = lmask & ~explored_;
        while (fresh) {
            int e = std::countr_zero(fresh);
            fresh &= fresh - 1;
            cand.new_edges.push_back(e);
            cand.partner_index.push_back(partner_for(lmask, e));
        }
        if (!cand.regular) return cand;
        // Pristine: partners pairwise vertex-disjoint outside the light
        // copy, and their fresh vertices untouched by the explored graph.
        std::uint64_t lverts = vertices_of_mask(lmask);
        std::uint64_t gverts = vertices_of_mask(explored_);
        std::uint64_t seen_outside = 0;
        bool ok = true;
        for (int pi : cand.partner_index) {
            std::uint64_t hverts = vertices_of_mask(fh_masks_[pi]);
            std::uint64_t outside = hverts & ~lverts;
            if ((outside & gverts) || (outside & seen_outside)) {
                ok = false;
                break;
            }
            seen_outside |= outside;
        }
        cand.pristine = ok;
        return cand;
    }

    StepRecord make_step(int step_index) {
        StepRecord rec{StepKind::degenerate_heavy, {}, {}, -1, Rat(0), 0};
        std::size_t hi =
            kernels::find_first_overlapping(fh_masks_.data(), fh_masks_.size(), explored_);
        if (hi != kernels::npos) {
            rec.kind = StepKind::degenerate_heavy;
            rec.main_copy = fh_[hi];
            add_edges(fh_masks_[hi] & ~explored_, step_index);
            boundary_ &= ~vertices_of_mask(fh_masks_[hi]);
        } else {
            std::vector<LightCandidate> cands;
            for (std::size_t li = 0; li < fl_.size(); ++li) {
                std::uint64_t m = fl_masks_[li];
                if ((m & explored_) && (m & ~explored_))
                    cands.push_back(analyze_light(static_cast<int>(li)));
            }
            if (cands.empty())
                throw CoreViolationError("no overlapping copy while the core is unexplored", -1);
            const LightCandidate* chosen = nullptr;
            for (const LightCandidate& c : cands) {
                if (!c.pristine) continue;
                if (!chosen) {
                    chosen = &c;
                    continue;
                }
                // Earliest-arrived root first, ties by edge index; final
                // ties resolved by copy order (lists are lex-sorted).
                auto key = [&](const LightCandidate& x) {
                    return std::make_pair(arrival_[x.root], x.root);
                };
                if (key(c) < key(*chosen)) chosen = &c;
            }
            if (chosen) {
                rec.kind = StepKind::pristine;
                rec.root_edge = chosen->root;
            } else {
                rec.kind = StepKind::degenerate_light;
                chosen = &cands.front();  // lex-smallest overlapping copy
            }
            rec.main_copy = fl_[chosen->copy_index];
            std::uint64_t lmask = fl_masks_[chosen->copy_index];
            std::uint64_t added = lmask;
            for (std::size_t i = 0; i < chosen->new_edges.size(); ++i) {
                rec.partners.push_back({chosen->new_edges[i], fh_[chosen->partner_index[i]]});
                added |= fh_masks_[chosen->partner_index[i]];
            }
            std::uint64_t old_vmask = vertices_of_mask(explored_);
            std::uint64_t lverts = vertices_of_mask(lmask);
            add_edges(added & ~explored_, step_index);
            if (rec.kind == StepKind::pristine) {
                std::uint64_t step_boundary = vertices_of_mask(explored_) & ~old_vmask & ~lverts;
                boundary_ &= ~edge_vmask_[rec.root_edge];
                boundary_ |= step_boundary;
            } else {
                boundary_ &= ~vertices_of_mask(added);
            }
        }
        rec.balance_after = balance_now();
        rec.boundary_size_after = std::popcount(boundary_);
        return rec;
    }

    void add_edges(std::uint64_t mask, int step_index) {
        while (mask) {
            int e = std::countr_zero(mask);
            mask &= mask - 1;
            explored_ |= 1ULL << e;
            arrival_[e] = step_index;
        }
    }

    const CoreTuple& core_;
    const ExplorationConfig& cfg_;
    std::vector<Copy> fh_, fl_;
    std::vector<std::uint64_t> fh_masks_, fl_masks_;
    std::vector<std::uint64_t> edge_vmask_;
    std::vector<int> arrival_;
    std::uint64_t explored_ = 0;
    std::uint64_t boundary_ = 0;
};

}  // namespace

ExplorationTrace explore_core(const CoreTuple& core, const ExplorationConfig& config) {
    CoreCheck check = is_core(core);
    if (!check.ok)
        throw CoreViolationError("fixture is not a core (condition " +
                                     std::to_string(check.failed_condition) + "): " + check.detail,
                                 -1);
    return Walker(core, config).run();
}

TraceReport verify_trace(const ExplorationTrace& trace, const ExplorationConfig& config) {
    TraceReport rep{true, {}, 0};
    auto flag = [&](int step, std::string what) {
        rep.ok = false;
        rep.findings.push_back({step, std::move(what)});
    };
    const Graph& g = trace.core.g;
    if (trace.start_edge != 0) flag(-1, "walk must start at the smallest edge");

    EdgeSet explored(g);
    explored.add(trace.start_edge);
    Rat prev = balance(explored, config.alpha);
    if (prev != Rat(1) - Rat(2) * config.alpha)
        flag(-1, "starting balance is not 1 - 2 alpha");

    long long degenerate = 0;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const StepRecord& step = trace.steps[i];
        int idx = static_cast<int>(i);
        if (explored.incident_vertex_count() >= config.vertex_cap)
            flag(idx, "step taken past the vertex cap");
        if (degenerate >= config.gamma) flag(idx, "step taken past the gamma cap");
        for (int e : step.main_copy.edges) explored.add(e);
        for (const PartnerCopy& p : step.partners) {
            for (int e : p.copy.edges) explored.add(e);
            // Partner meets the light copy in exactly its assigned edge.
            std::vector<int> common;
            std::set_intersection(p.copy.edges.begin(), p.copy.edges.end(),
                                  step.main_copy.edges.begin(), step.main_copy.edges.end(),
                                  std::back_inserter(common));
            if (common != std::vector<int>{p.edge})
                flag(idx, "partner copy does not meet the light copy exactly at its edge");
        }
        Rat b = balance(explored, config.alpha);
        if (b != step.balance_after) flag(idx, "recorded balance mismatch");
        if (b < prev) flag(idx, "balance decreased");
        if (step.kind == StepKind::degenerate_heavy && b - prev < config.delta1)
            flag(idx, "heavy step gained less than delta1");
        if (step.kind == StepKind::degenerate_light && !(b > prev))
            flag(idx, "degenerate light step did not strictly increase the balance");
        if (step.kind != StepKind::pristine) ++degenerate;
        prev = b;
    }

    std::vector<int> final_edges = explored.indices();
    if (final_edges != trace.final_edges) flag(-1, "final edge set mismatch");

    long long e_s = explored.size();
    long long v_s = explored.incident_vertex_count();
    bool exhausted = e_s == g.edge_count();
    switch (trace.stop_reason) {
        case StopReason::vertex_cap:
            rep.stop_case = 1;
            if (v_s < config.vertex_cap) flag(-1, "vertex-cap stop below the cap");
            if (Rat(e_s) < config.alpha * Rat(v_s - 2))
                flag(-1, "vertex-cap stop violates e >= alpha (v - 2)");
            break;
        case StopReason::gamma_degenerate:
            rep.stop_case = 2;
            if (degenerate < config.gamma) flag(-1, "gamma stop without gamma degenerate steps");
            if (v_s < config.vertex_cap && Rat(e_s) < config.alpha * Rat(v_s) + Rat(1))
                flag(-1, "gamma stop violates e >= alpha v + 1");
            break;
        case StopReason::exhausted:
            rep.stop_case = 3;
            if (!exhausted) flag(-1, "exhausted stop without exploring every edge");
            break;
    }
    return rep;
}

BoundaryReport pristine_boundary(const ExplorationTrace& trace) {
    BoundaryReport rep;
    const Graph& g = trace.core.g;
    auto vmask_of_edges = [&](const std::vector<int>& edges) {
        std::uint64_t m = 0;
        for (int e : edges) m |= (1ULL << g.edges[e].first) | (1ULL << g.edges[e].second);
        return m;
    };
    std::uint64_t explored_verts = vmask_of_edges({trace.start_edge});
    std::uint64_t boundary = 0;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const StepRecord& step = trace.steps[i];
        std::uint64_t lverts = vmask_of_edges(step.main_copy.edges);
        std::uint64_t touched = lverts;
        long long y = 0;
        for (const PartnerCopy& p : step.partners) {
            std::uint64_t hverts = vmask_of_edges(p.copy.edges);
            touched |= hverts;
            y += std::popcount(hverts) - 2;
        }
        if (step.kind == StepKind::pristine) {
            std::uint64_t step_boundary = touched & ~explored_verts & ~lverts;
            boundary &= ~vmask_of_edges({step.root_edge});
            boundary |= step_boundary;
            // Y_i >= 3 unless the light copy is a triangle and every partner
            // is a triangle (the case a heavy overlap would have consumed).
            bool all_triangles = step.main_copy.edges.size() == 3;
            for (const PartnerCopy& p : step.partners)
                all_triangles =
                    all_triangles && std::popcount(vmask_of_edges(p.copy.edges)) == 3;
            if (y < 3 && !all_triangles)
                rep.findings.push_back({static_cast<int>(i), "pristine step with Y < 3"});
        } else {
            boundary &= ~touched;
        }
        explored_verts |= touched;
        rep.sizes.push_back(std::popcount(boundary));
        if (step.boundary_size_after != rep.sizes.back())
            rep.findings.push_back({static_cast<int>(i), "recorded boundary size mismatch"});
    }
    return rep;
}

}  // namespace ramseylab
