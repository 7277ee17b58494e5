#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ramseylab/graph.hpp"
#include "ramseylab/rational.hpp"

namespace ramseylab {

/// An exact density value together with a witness subgraph attaining it.
/// The witness is empty exactly when a convention value applies (edgeless
/// graph, or the K2 convention for the 2-density).
struct Density {
    Rat value;
    EdgeSet witness;
};

/// m(G): max over nonempty subgraphs of e/v.
Density max_density(const Graph& g);

/// m1(G), the fractional arboricity: max over subgraphs with v >= 2 of e/(v-1).
Density one_density(const Graph& g);

/// m2(G): max over subgraphs with v >= 3 of (e-1)/(v-2), with the conventions
/// m2 = 1/2 when the densest subgraph is a single edge and 0 when edgeless.
Density two_density(const Graph& g);

/// m2(H, L) with 1/m2(L) supplied as a rational: max over subgraphs J of H
/// with v >= 2 of e/(v - 2 + 1/m2_light).
Density mixed_density(const Graph& h, const Rat& m2_light);

struct FamilyDensity {
    Rat value;
    int member;  // index of the minimizing member
    Density member_density;
};

FamilyDensity family_two_density(const GraphFamily& f);
FamilyDensity family_mixed_density(const GraphFamily& heavy, const GraphFamily& light);

/// Result of a strict-balancedness test; `violator` is a proper subgraph
/// attaining the relevant density when the test fails.
struct BalanceCheck {
    bool balanced;
    std::optional<EdgeSet> violator;
};

BalanceCheck is_strictly_two_balanced(const Graph& h);
BalanceCheck is_strictly_mixed_balanced(const Graph& h, const Rat& m2_light);

/// A heavy/light family pair with its exact densities. Constructed through
/// make_balanced_pair, which validates strict balancedness and the
/// m2(light) < alpha < m2(heavy) sandwich; `relaxed` skips those checks so
/// symmetric test fixtures (equal densities) can be represented.
struct BalancedPair {
    GraphFamily heavy;
    GraphFamily light;
    Rat alpha;     // m2(heavy, light)
    Rat m2_light;  // m2(light)
    Rat m2_heavy;  // m2(heavy)
    bool relaxed = false;
};

BalancedPair make_balanced_pair(const GraphFamily& heavy, const GraphFamily& light,
                                bool relaxed = false);

/// Replaces every light member by the minimal subgraph attaining its m2 and
/// every heavy member by the minimal subgraph attaining its mixed density
/// against the reduced light family; preserves m2(light) and alpha.
BalancedPair reduce_to_strictly_balanced(const GraphFamily& heavy, const GraphFamily& light);

struct DegeneracyResult {
    int d;
    std::vector<int> removal_order;  // each vertex has <= d neighbors after it
};

DegeneracyResult degeneracy(const Graph& g);

struct LemmaInstance {
    std::string lemma;
    bool light_family;
    int member;
    std::vector<int> subset;  // vertex subset of the member defining the subgraph
    Rat lhs, rhs;             // inequality checked as lhs >= rhs (or > when strict)
    bool strict_required;
    bool ok;
};

struct NumericLemmaReport {
    Rat m2_light, alpha, m2_heavy;
    bool sandwich_applicable;
    bool sandwich_ok;
    Rat x_value;  // min over heavy members of (e_H - 1) - alpha (v_H - 2)
    std::vector<LemmaInstance> instances;
    bool all_ok;
};

/// Exhaustively verifies the slack inequalities behind the exploration
/// analysis over all induced subgraphs of all family members. Violations are
/// findings (they indicate an implementation bug), not exceptions.
NumericLemmaReport check_numeric_lemmas(const BalancedPair& pair);

}  // namespace ramseylab
