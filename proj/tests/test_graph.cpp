#include <doctest.h>

#include "ramseylab/gnp.hpp"
#include "ramseylab/graph.hpp"

using namespace ramseylab;

TEST_CASE("named constructions") {
    Graph k4 = make_complete(4);
    CHECK(k4.n == 4);
    CHECK(k4.edge_count() == 6);

    Graph b33 = make_biclique(3, 3);
    CHECK(b33.n == 6);
    CHECK(b33.edge_count() == 9);
    for (int u = 0; u < 3; ++u)
        for (int v = 0; v < 3; ++v) {
            CHECK(b33.has_edge(u, 3 + v));
            CHECK_FALSE(b33.has_edge(u, (u + 1) % 3));
        }

    Graph c8 = make_cycle(8);
    CHECK(c8.n == 8);
    CHECK(c8.edge_count() == 8);
    CHECK_THROWS_AS(make_cycle(2), DomainError);

    Graph m = make_complete_multipartite({3, 3, 3, 3});
    CHECK(m.n == 12);
    CHECK(m.edge_count() == 54);

    CHECK(make_named("K5") == make_complete(5));
    CHECK(make_named("C8") == make_cycle(8));
    CHECK(make_named("K3,3") == make_biclique(3, 3));
    CHECK(make_named("K3,3,3,3") == m);
    CHECK(make_named("P4") == make_path(4));
    CHECK_THROWS_AS(make_named("Q7"), DomainError);
}

TEST_CASE("graph invariants") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 0}}), DomainError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), DomainError);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), DomainError);

    Graph g = Graph::from_edges(4, {{2, 3}, {0, 1}, {1, 3}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 3}, {2, 3}});
    CHECK(g.edge_index(3, 1) == 1);
    CHECK(g.edge_index(0, 2) == -1);

    // Handshake: degree sum is twice the edge count (random hosts).
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        Graph r = sample_gnp(12, 0.4, seed);
        int degsum = 0;
        for (int v = 0; v < r.n; ++v) degsum += r.degree(v);
        CHECK(degsum == 2 * r.edge_count());
    }
}

TEST_CASE("edge sets track their host") {
    Graph k4 = make_complete(4);
    Graph c5 = make_cycle(5);
    EdgeSet s(k4);
    s.add(0);
    CHECK_THROWS_AS(s.require_host(c5), HostMismatchError);
    CHECK_THROWS_AS(edge_subgraph(c5, s), HostMismatchError);

    EdgeSet full = EdgeSet::full(k4);
    CHECK(full.size() == 6);
    CHECK(edge_subgraph(k4, full).graph == k4);

    EdgeSet one = EdgeSet::of(k4, {0});
    CHECK(edge_subgraph(k4, one).graph == make_complete(2));

    // C5 with two disjoint edges: 4 vertices, 2 edges, 2 components.
    EdgeSet two = EdgeSet::of(c5, {c5.edge_index(0, 1), c5.edge_index(2, 3)});
    CHECK(two.incident_vertex_count() == 4);
    CHECK(two.component_count() == 2);
    Subgraph sub = edge_subgraph(c5, two);
    CHECK(sub.graph.n == 4);
    CHECK(sub.graph.edge_count() == 2);
    CHECK(sub.vertex_map == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("gnp sampling is deterministic and respects endpoints") {
    CHECK(sample_gnp(5, 0.0, 7).edge_count() == 0);
    CHECK(sample_gnp(5, 1.0, 7) == make_complete(5));
    Graph a = sample_gnp(100, 0.5, 123456);
    Graph b = sample_gnp(100, 0.5, 123456);
    CHECK(a == b);
    Graph c = sample_gnp(100, 0.5, 123457);
    CHECK_FALSE(a == c);
    // Roughly half of C(100,2) = 4950 pairs; generous window.
    CHECK(a.edge_count() > 2100);
    CHECK(a.edge_count() < 2850);
    CHECK_THROWS_AS(sample_gnp(5, 1.5, 1), DomainError);
}

TEST_CASE("family validation") {
    CHECK_THROWS_AS(GraphFamily({}, "empty"), DomainError);
    CHECK_THROWS_AS(GraphFamily({Graph::from_edges(2, {})}, "edgeless"), DomainError);
    GraphFamily fam({make_complete(3)}, "K3");
    CHECK(fam.size() == 1);
}
