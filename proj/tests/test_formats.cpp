#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"
#include "specgraph/constructions.hpp"
#include "specgraph/formats.hpp"

using namespace specgraph;

TEST_CASE("graph6 round trip on fixtures") {
    for (const Graph& g : {complete(1), complete(4), cycle(6), petersen(), star(5),
                           Graph::edgeless(2), complete_bipartite(3, 3)}) {
        Graph back = parse_graph6(to_graph6(g));
        CHECK(back == g);
    }
}

TEST_CASE("graph6 known encodings") {
    // values produced independently from the format definition by hand:
    // K_2 is n=2 (byte 'A') with the single upper-triangle bit set
    CHECK(to_graph6(complete(2)) == "A_");
    CHECK(to_graph6(Graph::edgeless(2)) == "A?");
    CHECK(to_graph6(complete(3)) == "Bw");
    CHECK(parse_graph6("A_") == complete(2));
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(parse_graph6("?") == Graph::edgeless(0));
}

TEST_CASE("graph6 header accepted") {
    CHECK(parse_graph6(">>graph6<<A_") == complete(2));
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("A"), ParseError);       // truncated
    CHECK_THROWS_AS(parse_graph6("A_X"), ParseError);     // trailing bytes
    CHECK_THROWS_AS(parse_graph6("A!"), ParseError);      // byte below 63
    CHECK_THROWS_AS(parse_graph6("\x7f"), ParseError);    // byte above 126
    CHECK_THROWS_AS(parse_graph6("~??"), ParseError);     // multi-byte order form
    // nonzero padding bits: K_2 body with a stray low bit
    CHECK_THROWS_AS(parse_graph6("A`"), ParseError);
    try {
        parse_graph6("A!");
    } catch (const ParseError& e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("graph6 rejects n > 62 on encode") {
    CHECK_THROWS_AS(to_graph6(Graph::edgeless(63)), std::invalid_argument);
    CHECK(to_graph6(Graph::edgeless(62)).size() == 1 + (62 * 61 / 2 + 5) / 6);
}

TEST_CASE("graph6 round trip randomized") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        int n = static_cast<int>(rng() % 20);
        Graph g = testoracle::gnp(n, 400, rng);
        CHECK(parse_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("edge list round trip") {
    Graph g = petersen();
    Graph back = parse_edge_list(to_edge_list(g));
    CHECK(back == g);
    CHECK(parse_edge_list("3 0\n") == Graph::edgeless(3));
}

TEST_CASE("edge list rejects malformed input") {
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n"), ParseError);          // no edge count
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), ParseError);   // fewer edges than declared
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 1\n1 0\n"), ParseError);  // more than declared
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 2\n"), ParseError);   // endpoint out of range
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), ParseError);   // loop
    CHECK_THROWS_AS(parse_edge_list("x 1\n"), ParseError);
}

TEST_CASE("read_graphs auto-detects") {
    // graph6 document: one graph per line
    std::string g6doc = to_graph6(cycle(5)) + "\n" + to_graph6(complete(4)) + "\n";
    auto gs = read_graphs(std::string_view(g6doc));
    REQUIRE(gs.size() == 2);
    CHECK(gs[0] == cycle(5));
    CHECK(gs[1] == complete(4));

    // edge-list document: single graph, first line starts with a digit
    auto gs2 = read_graphs(std::string_view("4 2\n0 1\n2 3\n"));
    REQUIRE(gs2.size() == 1);
    CHECK(gs2[0] == Graph::from_edge_list(4, {{0, 1}, {2, 3}}));

    std::istringstream in(g6doc);
    auto gs3 = read_graphs(in);
    CHECK(gs3.size() == 2);

    // inputs with nothing to parse are an error, not a silent empty result
    CHECK_THROWS_AS(read_graphs(std::string_view("")), ParseError);
    CHECK_THROWS_AS(read_graphs(std::string_view("\n\n")), ParseError);
}
