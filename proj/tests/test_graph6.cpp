#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "ramseylab/catalog.hpp"
#include "ramseylab/gnp.hpp"
#include "ramseylab/graph6.hpp"

using namespace ramseylab;

TEST_CASE("graph6 decoding of known strings") {
    // "A_" is K2.
    Graph k2 = parse_graph6("A_");
    CHECK(k2.n == 2);
    CHECK(k2.edge_count() == 1);

    // "D?{": 5 vertices, star centered at vertex 4.
    Graph star = parse_graph6("D?{");
    CHECK(star.n == 5);
    CHECK(star.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(star.has_edge(v, 4));
    CHECK(write_graph6(star) == "D?{");

    // "Bw" is K3; "BW" decodes (per the format) to the path 0-2, 1-2.
    CHECK(parse_graph6("Bw") == make_complete(3));
    Graph p3 = parse_graph6("BW");
    CHECK(p3.n == 3);
    CHECK(p3.edges == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

    // Header prefix is accepted.
    CHECK(parse_graph6(">>graph6<<A_") == k2);
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
    // "B@": nonzero padding bit in the data byte.
    CHECK_THROWS_AS(parse_graph6("B@"), DecodeError);
    try {
        parse_graph6("B@");
    } catch (const DecodeError& e) {
        CHECK(e.offset == 1);
    }
    CHECK_THROWS_AS(parse_graph6(""), DecodeError);
    CHECK_THROWS_AS(parse_graph6("D?"), DecodeError);     // truncated data
    CHECK_THROWS_AS(parse_graph6("A_!"), DecodeError);    // trailing bytes
    CHECK_THROWS_AS(parse_graph6("A\x1f"), DecodeError);  // byte below 63
}

TEST_CASE("graph6 round-trips") {
    // Catalog round-trip through an actual file of graph6 lines.
    {
        std::ofstream out("test_catalog5.g6", std::ios::binary);
        for (const Graph& g : all_graphs(5)) out << write_graph6(g) << "\n";
    }
    std::ifstream in("test_catalog5.g6");
    std::string line;
    std::size_t count = 0;
    while (std::getline(in, line)) {
        CHECK(write_graph6(parse_graph6(line)) == line);
        ++count;
    }
    CHECK(count == all_graphs(5).size());
    std::remove("test_catalog5.g6");
    // Random larger hosts, including one above the single-byte size range.
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = sample_gnp(30, 0.3, seed);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    Graph big = sample_gnp(70, 0.1, 99);
    std::string enc = write_graph6(big);
    CHECK(enc[0] == 126);
    CHECK(parse_graph6(enc) == big);
}

TEST_CASE("graph6 streams") {
    std::istringstream in("A_\n\nBw\n");
    std::vector<Graph> graphs = read_graph6_stream(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0].n == 2);
    CHECK(graphs[1] == make_complete(3));
}
