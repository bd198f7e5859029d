#include "doctest.h"

#include "oracle_helpers.hpp"

#include "growball/degree_split.hpp"
#include "growball/errors.hpp"

using namespace growball;

namespace {

// Distances between representatives must match the original graph exactly.
void check_distances_preserved(const Graph& original, const DegreeSplitResult& result) {
    for (VertexId u = 0; u < original.vertex_count(); ++u) {
        DistanceTable before = dijkstra(original, u);
        DistanceTable after = dijkstra(result.graph, result.representative[u]);
        for (VertexId v = 0; v < original.vertex_count(); ++v) {
            const auto& rv = after.dist[result.representative[v]];
            REQUIRE(before.dist[v].has_value() == rv.has_value());
            if (before.dist[v]) CHECK(*before.dist[v] == *rv);
        }
    }
}

} // namespace

TEST_CASE("star above the cap is split into chained copies") {
    std::string text = "9 8\n";
    for (int leaf = 1; leaf <= 8; ++leaf) text += "0 " + std::to_string(leaf) + " 3\n";
    Graph g = parse_graph(text);
    DegreeSplitResult result = split_degrees(g, 4);
    CHECK(result.graph.vertex_count() > g.vertex_count()); // center got copies
    CHECK(result.graph.max_degree() <= 4);
    check_distances_preserved(g, result);
}

TEST_CASE("graph already within the cap is untouched") {
    Graph g = testutil::connected_gnm(20, 19, 2); // near-tree, max degree small
    if (g.max_degree() <= 3) {
        DegreeSplitResult result = split_degrees(g, 3);
        CHECK(result.graph.vertex_count() == g.vertex_count());
        CHECK(result.graph.edge_count() == g.edge_count());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            CHECK(result.representative[v] == v);
    }
    Graph path = parse_graph("5 4\n0 1 1\n1 2 1\n2 3 1\n3 4 1");
    DegreeSplitResult result = split_degrees(path, 3);
    CHECK(result.graph.vertex_count() == 5);
    CHECK(result.graph.edge_count() == 4);
}

TEST_CASE("cap below 3 is rejected") {
    Graph g = parse_graph("2 1\n0 1 5");
    CHECK_THROWS_AS(split_degrees(g, 2), ParameterError);
}

TEST_CASE("constant-degree transform of K5") {
    std::string text = "5 10\n";
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            text += std::to_string(u) + " " + std::to_string(v) + " 2\n";
    Graph g = parse_graph(text);
    DegreeSplitResult result = make_constant_degree(g);
    CHECK(result.graph.max_degree() <= 3);
    CHECK(result.graph.vertex_count() <= g.vertex_count() + 2 * g.edge_count());
    check_distances_preserved(g, result);
}

TEST_CASE("constant-degree transform leaves small cases alone") {
    Graph triangle = parse_graph("3 3\n0 1 1\n1 2 1\n0 2 1");
    CHECK(make_constant_degree(triangle).graph.vertex_count() == 3);
    Graph lonely = parse_graph("1 0\n");
    CHECK(make_constant_degree(lonely).graph.vertex_count() == 1);
}

TEST_CASE("distances preserved on random graphs") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = testutil::connected_gnm(30 + 5 * seed, 3 * (30 + 5 * seed), seed);
        DegreeSplitResult result = make_constant_degree(g);
        CHECK(result.graph.max_degree() <= 3);
        CHECK(result.graph.vertex_count() <= g.vertex_count() + 2 * g.edge_count());
        check_distances_preserved(g, result);
    }
}
