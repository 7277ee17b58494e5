#include <doctest.h>

#include "ramseylab/catalog.hpp"
#include "ramseylab/decompose.hpp"
#include "ramseylab/matroid.hpp"

using namespace ramseylab;

namespace {

BalancedPair k4k3() {
    return make_balanced_pair(GraphFamily({make_complete(4)}, "K4"),
                              GraphFamily({make_complete(3)}, "K3"));
}

void check_partition(const Graph& g, const EdgeBipartition& parts) {
    CHECK_FALSE(parts.red.intersects(parts.blue));
    EdgeSet all = parts.red;
    all |= parts.blue;
    CHECK(all.size() == g.edge_count());
}

}  // namespace

TEST_CASE("degenerate vertex partitions") {
    Graph k4 = make_complete(4);
    auto parts = degenerate_vertex_partition(k4, 2, 2);
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() + parts[1].size() == 4);

    // Forests are 1-degenerate; d=1, k=2 is a proper 2-coloring.
    Graph tree = make_path(6);
    auto tparts = degenerate_vertex_partition(tree, 1, 2);
    for (const auto& p : tparts)
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j) CHECK_FALSE(tree.has_edge(p[i], p[j]));

    // K6 is 5-degenerate = dk-1 for d=3, k=2.
    auto k6parts = degenerate_vertex_partition(make_complete(6), 3, 2);
    REQUIRE(k6parts.size() == 2);

    CHECK_THROWS_AS(degenerate_vertex_partition(make_complete(6), 2, 2), InfeasibleError);
}

TEST_CASE("bipartite and chromatic splits") {
    Graph k4 = make_complete(4);
    EdgeBipartition b = split_bipartite_case(k4, 2);
    check_partition(k4, b);
    CHECK(degeneracy(edge_subgraph(k4, b.red).graph).d <= 1);

    EdgeBipartition c = split_chromatic_case(k4, 2);
    check_partition(k4, c);
    CHECK(graphic_independent(k4, c.blue));

    Graph c5 = make_cycle(5);
    check_partition(c5, split_bipartite_case(c5, 2));

    Graph k2 = make_complete(2);
    EdgeBipartition kb = split_bipartite_case(k2, 1);
    CHECK(kb.red.empty());
    CHECK(kb.blue.size() == 1);

    Graph tree = make_path(5);
    EdgeBipartition tc = split_chromatic_case(tree, 1);
    CHECK(tc.blue.size() == 4);
    CHECK(tc.red.empty());

    Graph k6 = make_complete(6);
    EdgeBipartition kc = split_chromatic_case(k6, 3);
    check_partition(k6, kc);
    CHECK(graphic_independent(k6, kc.blue));

    CHECK_THROWS_AS(split_bipartite_case(make_complete(4), 1), InfeasibleError);
}

TEST_CASE("forest split") {
    Graph k5 = make_complete(5);
    EdgeBipartition parts = split_forest_case(k5, Rat(2));
    check_partition(k5, parts);
    CHECK(one_density(edge_subgraph(k5, parts.red).graph).value <= Rat(1));
    CHECK(one_density(edge_subgraph(k5, parts.blue).graph).value <= Rat(2));

    Graph tree = make_path(6);
    EdgeBipartition tparts = split_forest_case(tree, Rat(2));
    check_partition(tree, tparts);
    CHECK(tparts.red.empty());

    Graph k4 = make_complete(4);
    EdgeBipartition kparts = split_forest_case(k4, Rat(2));
    check_partition(k4, kparts);
    CHECK(graphic_independent(k4, kparts.red));  // one forest
}

TEST_CASE("st splits") {
    // K_{3,3} is a (3,3)-graph, so (2,2) splitting fails with a certificate.
    Graph b33 = make_biclique(3, 3);
    StSplit fail = split_st_case(b33, 2, 2);
    REQUIRE_FALSE(fail.success);
    CHECK(fail.certificate.size() == 9);
    // Certificate is an (s+1, t+1)-graph: check 1/s + 1/t >= v/e on it.
    EdgeSet cert = fail.certificate;
    CHECK(Rat(1, 3) + Rat(1, 3) >= Rat(cert.incident_vertex_count(), cert.size()));

    Graph c6 = make_cycle(6);
    StSplit ok = split_st_case(c6, 1, 2);
    REQUIRE(ok.success);
    check_partition(c6, ok.parts);
    CHECK(graphic_independent(c6, ok.parts.blue));
    CHECK(is_st_avoiding(c6, ok.parts.red, 1, 2));

    Graph k2 = make_complete(2);
    StSplit single = split_st_case(k2, 1, 1);
    REQUIRE(single.success);
    CHECK(single.parts.blue.size() == 1);

    // Verified avoidance on every split over the 5-vertex catalog.
    for (const Graph& g : all_graphs(5)) {
        if (g.edge_count() == 0) continue;
        StSplit s = split_st_case(g, 2, 2);
        if (!s.success) {
            EdgeSet core;
            CHECK_FALSE(is_st_avoiding(g, s.certificate, 3, 3, &core));
            continue;
        }
        check_partition(g, s.parts);
        CHECK(graphic_independent(g, s.parts.blue));
        CHECK(is_st_avoiding(g, s.parts.red, 2, 2));
    }
}

TEST_CASE("integer split") {
    Graph k5 = make_complete(5);
    EdgeBipartition parts = split_integer_case(k5, 2);
    check_partition(k5, parts);
    CHECK(graphic_independent(k5, parts.blue));
    CHECK(two_density(edge_subgraph(k5, parts.red).graph).value <= Rat(2));

    Graph tree = make_path(5);
    EdgeBipartition tparts = split_integer_case(tree, 1);
    check_partition(tree, tparts);

    Graph k4 = make_complete(4);
    EdgeBipartition kparts = split_integer_case(k4, 2);
    check_partition(k4, kparts);
    CHECK(two_density(edge_subgraph(k4, kparts.red).graph).value <= Rat(2));

    CHECK_THROWS_AS(split_integer_case(make_complete(6), 2), InfeasibleError);
}

TEST_CASE("chromatic numbers") {
    CHECK(chromatic_number(make_complete(4)) == 4);
    CHECK(chromatic_number(make_cycle(5)) == 3);
    CHECK(chromatic_number(make_cycle(8)) == 2);
    CHECK(chromatic_number(make_biclique(3, 3)) == 2);
    CHECK(chromatic_number(make_path(5)) == 2);
    CHECK(chromatic_number(make_complete_multipartite({3, 3, 3, 3})) == 4);
    CHECK(chromatic_number(Graph::from_edges(3, {})) == 1);
}

TEST_CASE("applicable cases for the reference pairs") {
    StrategyReport r1 = applicable_cases(k4k3());
    CHECK(r1.case_a);        // chi(K3) = 3
    CHECK(r1.case_b);        // chi(K4) = 4 > 12/5 + 1
    CHECK_FALSE(r1.case_c);  // m1(K3) = 3/2
    CHECK_FALSE(r1.case_d);  // no (s,t) satisfies the inequality at alpha = 12/5
    CHECK_FALSE(r1.case_e);  // ceil(12/5) = 3 is not below m2(K4) = 5/2

    BalancedPair big = make_balanced_pair(
        GraphFamily({make_complete_multipartite({3, 3, 3, 3})}, "K3333"),
        GraphFamily({make_cycle(8)}, "C8"));
    StrategyReport r2 = applicable_cases(big);
    CHECK_FALSE(r2.case_a);  // C8 is bipartite
    CHECK_FALSE(r2.case_b);  // chi = 4 is below alpha + 1
    CHECK_FALSE(r2.case_c);  // m1(C8) = 8/7
    CHECK(r2.case_e);        // ceil(189/38) = 5 < m2 = 53/10
    // The 9-regular host is a (9,9)-graph and 2/10 < 38/189, so the
    // (s,t) search succeeds as well.
    CHECK(r2.case_d);
    REQUIRE(r2.st.has_value());
    CHECK(*r2.st == std::make_pair(9, 9));

    BalancedPair b33c4 = make_balanced_pair(GraphFamily({make_biclique(3, 3)}, "K33"),
                                            GraphFamily({make_cycle(4)}, "C4"));
    CHECK(b33c4.alpha == Rat(27, 14));
    StrategyReport r3 = applicable_cases(b33c4);
    CHECK(r3.case_d);  // (3,3): 1/4 + 1/4 < 14/27
    REQUIRE(r3.st.has_value());
    CHECK(*r3.st == std::make_pair(3, 3));
}

TEST_CASE("anti-ramsey colorings") {
    BalancedPair pair = k4k3();

    // m(K5) = 2 <= 12/5: a verified coloring exists (case b).
    Graph k5 = make_complete(5);
    AntiRamseyOutcome out = anti_ramsey_coloring(k5, pair);
    REQUIRE(out.success);
    CHECK(verify_coloring(k5, out.parts, pair).ok);

    // Forests take the all-blue strategy.
    Graph tree = make_path(6);
    AntiRamseyOutcome tout = anti_ramsey_coloring(tree, pair);
    REQUIRE(tout.success);
    CHECK(tout.parts.strategy == "all-blue");
    CHECK(verify_coloring(tree, tout.parts, pair).ok);

    // m(K6) = 5/2 > 12/5: refused.
    CHECK_THROWS_AS(anti_ramsey_coloring(make_complete(6), pair), DomainError);
}

TEST_CASE("coloring verification") {
    BalancedPair pair = k4k3();
    Graph k3 = make_complete(3);
    EdgeBipartition all_blue{EdgeSet(k3), EdgeSet::full(k3), "test"};
    ColoringCheck bad = verify_coloring(k3, all_blue, pair);
    CHECK_FALSE(bad.ok);
    CHECK(bad.color == 1);
    CHECK(bad.violating_copy.size() == 3);

    EdgeBipartition all_red{EdgeSet::full(k3), EdgeSet(k3), "test"};
    CHECK(verify_coloring(k3, all_red, pair).ok);

    // K6 with a red K5: contains a red K4.
    Graph k6 = make_complete(6);
    EdgeSet red(k6);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) red.add(k6.edge_index(u, v));
    EdgeBipartition mixed{red, red.complement(), "test"};
    ColoringCheck bad2 = verify_coloring(k6, mixed, pair);
    CHECK_FALSE(bad2.ok);
    CHECK(bad2.color == 0);
}

TEST_CASE("conjecture search") {
    // Integer case: K5 with m = 2.
    ConjectureOutcome k5 = conjecture_search(make_complete(5));
    REQUIRE(k5.found);
    CHECK(k5.target == Rat(2));
    CHECK(k5.complement_m2 <= Rat(2));

    // Trees: trivially satisfiable (m2 of what remains stays below m).
    Graph p6 = make_path(6);
    ConjectureOutcome tree = conjecture_search(p6);
    REQUIRE(tree.found);
    CHECK(tree.complement_m2 <= tree.target);
    CHECK(graphic_independent(p6, tree.forest));

    // K4: m = 3/2, needs a non-star spanning forest.
    ConjectureOutcome k4 = conjecture_search(make_complete(4));
    REQUIRE(k4.found);
    CHECK(k4.target == Rat(3, 2));
    CHECK(k4.complement_m2 <= Rat(3, 2));

    CHECK_THROWS_AS(conjecture_search(make_complete(8), 24), BudgetError);
}
