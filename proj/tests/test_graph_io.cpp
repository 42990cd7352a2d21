#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "chromapol/enumerate.hpp"
#include "chromapol/graph_io.hpp"
#include "test_helpers.hpp"

using chromapol::Graph;
using chromapol::GraphFormatError;
using chromapol::graph6_parse;
using chromapol::graph6_serialize;

TEST_CASE("graph6 known strings", "[io]") {
    CHECK(graph6_serialize(testutil::complete_graph(3)) == "Bw");
    CHECK(graph6_serialize(testutil::complete_graph(4)) == "C~");
    CHECK(graph6_serialize(testutil::cycle_graph(4)) == "Cl");
    CHECK(graph6_serialize(Graph(0)) == "?");
    CHECK(graph6_serialize(Graph(1)) == "@");
    CHECK(graph6_serialize(Graph::build(2, {{0, 1}})) == "A_");

    CHECK(graph6_parse("Bw") == testutil::complete_graph(3));
    CHECK(graph6_parse("C~") == testutil::complete_graph(4));
    CHECK(graph6_parse("?").order() == 0);
}

TEST_CASE("graph6 optional header", "[io]") {
    CHECK(graph6_parse(">>graph6<<Bw") == testutil::complete_graph(3));
}

TEST_CASE("graph6 round trip over all small graphs", "[io]") {
    for (int n = 0; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < chromapol::labeled_graph_count(n); ++mask) {
            const Graph g = chromapol::graph_from_edge_mask(n, mask);
            CHECK(graph6_parse(graph6_serialize(g)) == g);
        }
    }
}

TEST_CASE("graph6 extended order field", "[io]") {
    for (int n : {62, 63, 64}) {
        Graph g(n);
        g.add_edge(0, n - 1);
        g.add_edge(5, 17);
        const std::string s = graph6_serialize(g);
        if (n >= 63) CHECK(s[0] == '~');
        CHECK(graph6_parse(s) == g);
    }
    // order 65 encoded in the long form must be rejected (3 * 6-bit digits)
    std::string too_big = "~";
    too_big += static_cast<char>(63);
    too_big += static_cast<char>(63 + 1);
    too_big += static_cast<char>(63 + 1);  // 65
    CHECK_THROWS_AS(graph6_parse(too_big), GraphFormatError);
}

TEST_CASE("graph6 malformed input", "[io]") {
    CHECK_THROWS_AS(graph6_parse(""), GraphFormatError);
    CHECK_THROWS_AS(graph6_parse("B\x1f"), GraphFormatError);   // byte below range
    CHECK_THROWS_AS(graph6_parse("Bw "), GraphFormatError);     // trailing junk
    CHECK_THROWS_AS(graph6_parse("B"), GraphFormatError);       // truncated body
    CHECK_THROWS_AS(graph6_parse("Bww"), GraphFormatError);     // oversized body
    CHECK_THROWS_AS(graph6_parse("~~????"), GraphFormatError);  // 18-bit order form
    CHECK_THROWS_AS(graph6_parse("~??"), GraphFormatError);     // truncated order field
    // order 3 uses 3 of 6 body bits; setting the padding ones must fail
    CHECK_THROWS_AS(graph6_parse("B~"), GraphFormatError);
}

TEST_CASE("edge list parsing", "[io]") {
    const Graph g = chromapol::edge_list_parse("4 4\n1 2\n2 3\n3 4\n4 1\n");
    CHECK(g == testutil::cycle_graph(4));

    const Graph empty = chromapol::edge_list_parse("3 0\n");
    CHECK(empty.order() == 3);
    CHECK(empty.edge_count() == 0);

    CHECK_THROWS_AS(chromapol::edge_list_parse(""), GraphFormatError);
    CHECK_THROWS_AS(chromapol::edge_list_parse("x y"), GraphFormatError);
    CHECK_THROWS_AS(chromapol::edge_list_parse("3 1\n"), GraphFormatError);      // missing edge
    CHECK_THROWS_AS(chromapol::edge_list_parse("3 1\n0 1\n"), GraphFormatError); // labels are 1-based
    CHECK_THROWS_AS(chromapol::edge_list_parse("3 1\n1 4\n"), GraphFormatError);
    CHECK_THROWS_AS(chromapol::edge_list_parse("3 1\n2 2\n"), GraphFormatError); // self-loop
    CHECK_THROWS_AS(chromapol::edge_list_parse("-1 0\n"), GraphFormatError);
    CHECK_THROWS_AS(chromapol::edge_list_parse("70 0\n"), GraphFormatError);
}

TEST_CASE("edge list round trip", "[io]") {
    const Graph g = testutil::complete_bipartite(2, 3);
    std::ostringstream out;
    chromapol::edge_list_serialize(g, out);
    CHECK(chromapol::edge_list_parse(out.str()) == g);
}
