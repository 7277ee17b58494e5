#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramseylab/ramsey.hpp"

namespace ramseylab {

struct ExplorationConfig {
    Rat alpha;        // mixed density of the pair driving the balance
    long long gamma;  // stop after this many degenerate steps
    int vertex_cap;   // stop once the explored graph reaches this many vertices
    Rat delta1;       // guaranteed balance gain of a degenerate heavy step
    Rat x_value;      // min over heavy members of (e_H - 1) - alpha (v_H - 2)
};

/// Minimum over heavy members H and proper subgraphs F of
/// (e_H - e_F) - alpha (v_H - v_F). Positive exactly when every member is
/// strictly mixed-balanced at alpha; nonpositive values throw unless
/// `require_positive` is cleared (relaxed symmetric fixtures).
Rat compute_delta1(const GraphFamily& heavy, const Rat& alpha, bool require_positive = true);

Rat compute_x(const GraphFamily& heavy, const Rat& alpha);

/// Builds a config from the pair. Gamma defaults to ceil(2 alpha / delta)
/// with delta = min(delta1, 1); relaxed pairs (delta1 <= 0) must supply an
/// explicit gamma.
ExplorationConfig make_config(const BalancedPair& pair, int vertex_cap,
                              std::optional<long long> gamma_override = std::nullopt);

/// b(S) = e_S - alpha v_S over incident vertices. S must be nonempty.
Rat balance(const EdgeSet& s, const Rat& alpha);

enum class StepKind { degenerate_heavy, pristine, degenerate_light };
enum class StopReason { vertex_cap, exhausted, gamma_degenerate };

struct PartnerCopy {
    int edge;  // the new light-copy edge this partner meets exactly
    Copy copy;
};

struct StepRecord {
    StepKind kind;
    Copy main_copy;                    // the added heavy copy, or the light copy
    std::vector<PartnerCopy> partners; // light steps: one heavy partner per new edge
    int root_edge;                     // pristine steps only, else -1
    Rat balance_after;
    int boundary_size_after;
};

struct ExplorationTrace {
    CoreTuple core;
    ExplorationConfig config;
    int start_edge;
    std::vector<StepRecord> steps;
    StopReason stop_reason;
    std::vector<int> final_edges;  // explored edge set at stopping time
};

/// Deterministic exploration walk over a validated core: heavy overlaps
/// first, then the earliest-rooted pristine light copy, then the smallest
/// overlapping light copy, each with its single-edge heavy partners.
ExplorationTrace explore_core(const CoreTuple& core, const ExplorationConfig& config);

struct TraceFinding {
    int step;  // -1 for trace-level findings
    std::string what;
};

struct TraceReport {
    bool ok;
    std::vector<TraceFinding> findings;
    int stop_case;  // 1: vertex cap, 2: gamma, 3: exhausted
};

/// Re-checks a trace from scratch: starting balance 1 - 2 alpha, balances
/// non-decreasing, heavy steps gaining >= delta1, light degenerate steps
/// gaining strictly, stop rule consistency, and the stop-case edge-count
/// inequality. Violations are findings, not exceptions.
TraceReport verify_trace(const ExplorationTrace& trace, const ExplorationConfig& config);

struct BoundaryReport {
    std::vector<int> sizes;  // pristine boundary size after each step
    std::vector<TraceFinding> findings;
};

/// Recomputes the pristine-boundary bookkeeping: pristine steps swap the
/// root endpoints for the step boundary, degenerate steps only remove
/// touched vertices. Flags pristine steps whose boundary increment Y_i
/// falls below 3 outside the all-triangle exception.
BoundaryReport pristine_boundary(const ExplorationTrace& trace);

}  // namespace ramseylab
