#include <doctest.h>

#include "ramseylab/catalog.hpp"
#include "ramseylab/graph6.hpp"

using namespace ramseylab;

TEST_CASE("catalog counts match the known census") {
    // Graphs per vertex count up to isomorphism: 1, 2, 4, 11, 34, 156, 1044
    // (OEIS A000088), connected: 1, 1, 2, 6, 21, 112, 853 (A001349).
    const int all_counts[] = {1, 2, 4, 11, 34, 156, 1044};
    const int conn_counts[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        const auto& graphs = all_graphs(n);
        CHECK(static_cast<int>(graphs.size()) == all_counts[n - 1]);
        int connected = 0;
        for (const Graph& g : graphs) connected += is_connected(g);
        CHECK(connected == conn_counts[n - 1]);
    }
}

TEST_CASE("catalog entries are pairwise non-isomorphic at small sizes") {
    const auto& graphs = all_graphs(5);
    for (std::size_t i = 0; i < graphs.size(); ++i)
        for (std::size_t j = i + 1; j < graphs.size(); ++j)
            CHECK_FALSE(are_isomorphic(graphs[i], graphs[j]));
}

TEST_CASE("isomorphism test") {
    Graph c5 = make_cycle(5);
    Graph c5_relabeled = Graph::from_edges(5, {{0, 2}, {2, 4}, {4, 1}, {1, 3}, {3, 0}});
    CHECK(are_isomorphic(c5, c5_relabeled));
    Graph p5 = make_path(5);
    CHECK_FALSE(are_isomorphic(c5, p5));
    CHECK(are_isomorphic(make_biclique(2, 3), parse_graph6(write_graph6(make_biclique(2, 3)))));
}

TEST_CASE("connectivity and acyclicity") {
    CHECK(is_connected(make_complete(4)));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_acyclic(make_path(5)));
    CHECK_FALSE(is_acyclic(make_cycle(4)));
    CHECK(is_acyclic(Graph::from_edges(1, {})));
}
