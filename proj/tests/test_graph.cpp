#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <vector>

#include "chromapol/enumerate.hpp"
#include "chromapol/graph.hpp"
#include "chromapol/partitions.hpp"
#include "test_helpers.hpp"

using chromapol::Graph;
using testutil::complete_graph;
using testutil::cycle_graph;
using testutil::path_graph;

TEST_CASE("construction validates input", "[graph]") {
    CHECK_THROWS_AS(Graph::build(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::build(3, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(65), std::invalid_argument);

    const Graph g = Graph::build(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(g.edge_count() == 1);  // duplicates collapse
}

TEST_CASE("adjacency basics", "[graph]") {
    const Graph g = path_graph(4);
    CHECK(g.order() == 4);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(0) == 1);
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == 0b0101u);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("induced subgraph relabels downward", "[graph]") {
    const Graph g = cycle_graph(5);
    std::vector<int> map;
    const Graph h = chromapol::induced_subgraph(g, 0b11010u, &map);  // keep 1,3,4
    CHECK(h.order() == 3);
    CHECK(map[1] == 0);
    CHECK(map[3] == 1);
    CHECK(map[4] == 2);
    CHECK(h.adjacent(1, 2));        // 3-4 survives
    CHECK_FALSE(h.adjacent(0, 1));  // 1-3 never existed
    CHECK(h.edge_count() == 1);     // 1-2 and 4-0 lose an endpoint
}

TEST_CASE("delete and contract", "[graph]") {
    const Graph c4 = cycle_graph(4);
    const Graph p3 = chromapol::delete_vertex(c4, 3);
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(chromapol::is_tree(p3));

    const Graph minus = chromapol::delete_edge(c4, 0, 1);
    CHECK(minus.edge_count() == 3);
    CHECK(chromapol::is_tree(minus));
    CHECK_THROWS_AS(chromapol::delete_edge(c4, 0, 2), std::invalid_argument);

    const Graph tri = chromapol::contract_edge(c4, 0, 1);
    CHECK(tri.order() == 3);
    CHECK(chromapol::is_cycle_graph(tri));

    // contracting a triangle edge collapses the parallel pair
    const Graph k3 = complete_graph(3);
    const Graph k2 = chromapol::contract_edge(k3, 0, 1);
    CHECK(k2.order() == 2);
    CHECK(k2.edge_count() == 1);
}

TEST_CASE("components come ordered by smallest label", "[graph]") {
    const Graph g = Graph::build(6, {{2, 4}, {1, 5}});
    const auto comps = chromapol::components(g).blocks;
    REQUIRE(comps.size() == 4);
    CHECK(comps[0] == 0b000001u);  // {0}
    CHECK(comps[1] == 0b100010u);  // {1,5}
    CHECK(comps[2] == 0b010100u);  // {2,4}
    CHECK(comps[3] == 0b001000u);  // {3}
    CHECK(chromapol::component_count(g) == 4);
    CHECK_FALSE(chromapol::is_connected(g));
    CHECK(chromapol::has_isolated_vertex(g));
    CHECK(chromapol::is_connected(cycle_graph(5)));
    CHECK_FALSE(chromapol::has_isolated_vertex(cycle_graph(5)));
}

TEST_CASE("shape predicates", "[graph]") {
    CHECK(chromapol::is_tree(path_graph(5)));
    CHECK(chromapol::is_tree(testutil::star_graph(6)));
    CHECK_FALSE(chromapol::is_tree(cycle_graph(4)));
    CHECK_FALSE(chromapol::is_tree(Graph::build(4, {{0, 1}, {2, 3}})));  // forest, not tree
    CHECK(chromapol::is_complete(complete_graph(4)));
    CHECK(chromapol::is_complete(Graph(1)));
    CHECK_FALSE(chromapol::is_complete(path_graph(3)));
    CHECK(chromapol::is_cycle_graph(cycle_graph(3)));
    CHECK(chromapol::is_cycle_graph(cycle_graph(6)));
    CHECK_FALSE(chromapol::is_cycle_graph(path_graph(4)));
    CHECK_FALSE(chromapol::is_cycle_graph(testutil::disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("simplicial vertices", "[graph]") {
    const Graph k4 = complete_graph(4);
    for (int v = 0; v < 4; ++v) CHECK(chromapol::is_simplicial(k4, v));
    const Graph c4 = cycle_graph(4);
    for (int v = 0; v < 4; ++v) CHECK_FALSE(chromapol::is_simplicial(c4, v));
    const Graph p3 = path_graph(3);
    CHECK(chromapol::is_simplicial(p3, 0));
    CHECK(chromapol::is_simplicial(p3, 2));
    CHECK_FALSE(chromapol::is_simplicial(p3, 1));
}

TEST_CASE("elimination ordering agrees with permutation search", "[graph][slow]") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < chromapol::labeled_graph_count(n); ++mask) {
            const Graph g = chromapol::graph_from_edge_mask(n, mask);
            const auto order = chromapol::perfect_elimination_ordering(g);
            REQUIRE(order.has_value() == testutil::brute_has_elimination_order(g));
            if (order) {
                // returned order must itself satisfy the prefix-clique property
                Graph::VertexSet prefix = 0;
                for (int v : *order) {
                    CHECK(chromapol::is_clique(g, g.neighbors(v) & prefix));
                    prefix |= Graph::VertexSet{1} << v;
                }
            }
        }
    }
}

TEST_CASE("chordality spots", "[graph]") {
    CHECK(chromapol::is_chordal(complete_graph(5)));
    CHECK(chromapol::is_chordal(path_graph(6)));
    CHECK(chromapol::is_chordal(cycle_graph(3)));
    CHECK_FALSE(chromapol::is_chordal(cycle_graph(4)));
    CHECK_FALSE(chromapol::is_chordal(cycle_graph(6)));
    CHECK_FALSE(chromapol::is_chordal(testutil::complete_bipartite(2, 3)));
}

TEST_CASE("chordal proper spanning subgraph test", "[graph]") {
    const Graph c4 = cycle_graph(4);
    const Graph p4 = path_graph(4);
    CHECK(chromapol::is_chordal_proper_spanning_subgraph(p4, c4));
    CHECK_FALSE(chromapol::is_chordal_proper_spanning_subgraph(c4, c4));  // not proper
    // chordal but not a subgraph
    const Graph other = Graph::build(4, {{0, 2}});
    CHECK_FALSE(chromapol::is_chordal_proper_spanning_subgraph(other, c4));
    CHECK_THROWS_AS(chromapol::is_chordal_proper_spanning_subgraph(path_graph(3), c4),
                    std::invalid_argument);
}

TEST_CASE("split_connected peels a non-cut vertex", "[graph]") {
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < chromapol::labeled_graph_count(n); ++mask) {
            const Graph g = chromapol::graph_from_edge_mask(n, mask);
            for (const Graph::VertexSet comp : chromapol::components(g).blocks) {
                if (std::popcount(comp) < 2) continue;
                const auto [leaf, rest] = chromapol::split_connected(g, comp);
                CHECK(std::popcount(leaf) == 1);
                CHECK((leaf & rest) == 0);
                CHECK((leaf | rest) == comp);
                CHECK(chromapol::connected_within(g, rest));
            }
        }
    }
}

TEST_CASE("connected partition enumeration matches raw partition filter", "[graph][slow]") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t mask = 0; mask < chromapol::labeled_graph_count(n); mask += (n < 5 ? 1 : 7)) {
            const Graph g = chromapol::graph_from_edge_mask(n, mask);
            for (int k = 1; k <= n; ++k) {
                CHECK(chromapol::count_connected_partitions(g, k) ==
                      testutil::brute_connected_partitions(g, k));
            }
        }
    }
}

TEST_CASE("connected partition stream structure", "[graph]") {
    const Graph g = cycle_graph(5);
    std::set<std::vector<Graph::VertexSet>> seen;
    chromapol::for_each_connected_partition(g, 3, [&](const chromapol::VertexPartition& p) {
        REQUIRE(p.blocks.size() == 3);
        Graph::VertexSet all = 0;
        int prev_low = -1;
        for (const auto b : p.blocks) {
            REQUIRE(b != 0);
            REQUIRE((all & b) == 0);
            all |= b;
            CHECK(chromapol::connected_within(g, b));
            const int low = chromapol::detail::lowest_vertex(b);
            CHECK(low > prev_low);  // blocks ordered by smallest label
            prev_low = low;
        }
        CHECK(all == g.vertices());
        seen.insert(p.blocks);
    });
    CHECK(seen.size() == chromapol::count_connected_partitions(g, 3));

    // early stop after two partitions
    int count = 0;
    const bool finished = chromapol::for_each_connected_partition(
        g, 3, [&](const chromapol::VertexPartition&) { return ++count < 2; });
    CHECK_FALSE(finished);
    CHECK(count == 2);
}

TEST_CASE("ordered partition rule: anchor block first, then smallest labels", "[graph]") {
    chromapol::VertexPartition p;
    p.blocks = {0b00101u, 0b01010u, 0b10000u};  // {0,2} {1,3} {4}
    const auto ordered = chromapol::order_partition(p, 3);
    REQUIRE(ordered.blocks.size() == 3);
    CHECK(ordered.anchor == 3);
    CHECK(ordered.blocks[0] == 0b01010u);  // anchor 3 lives here
    CHECK(ordered.blocks[1] == 0b00101u);  // min label 0
    CHECK(ordered.blocks[2] == 0b10000u);  // min label 4

    chromapol::VertexPartition bad;
    bad.blocks = {0b00011u};
    CHECK_THROWS_AS(chromapol::order_partition(bad, 3), std::invalid_argument);
}

TEST_CASE("labeled graph enumeration", "[graph]") {
    CHECK(chromapol::labeled_graph_count(1) == 1);
    CHECK(chromapol::labeled_graph_count(4) == 64);
    CHECK(chromapol::labeled_graph_count(5) == 1024);
    CHECK_THROWS_AS(chromapol::labeled_graph_count(12), std::invalid_argument);

    // every 4-vertex labeled graph appears exactly once
    std::set<std::string> seen;
    std::uint64_t count = 0;
    chromapol::for_each_labeled_graph(4, [&](const Graph& g) {
        ++count;
        std::string key;
        for (const auto& [u, v] : g.edges()) key += std::to_string(u) + std::to_string(v);
        seen.insert(key);
    });
    CHECK(count == 64);
    CHECK(seen.size() == 64);
}
