#include "doctest.h"

#include "oracle_helpers.hpp"

#include "growball/dijkstra.hpp"
#include "growball/errors.hpp"
#include "growball/weight.hpp"

using namespace growball;

namespace {
const char* kTriangle = "3 3\n0 1 1\n1 2 1\n0 2 5";
}

TEST_CASE("dijkstra on a unit path") {
    Graph g = parse_graph("3 2\n0 1 1\n1 2 1");
    DistanceTable t = dijkstra(g, 0);
    CHECK(t.dist[0]->raw() == 0);
    CHECK(t.dist[1]->raw() == 1);
    CHECK(t.dist[2]->raw() == 2);
    CHECK(t.settle_order == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("dijkstra takes the two-hop route in the triangle") {
    Graph g = parse_graph(kTriangle);
    DistanceTable t = dijkstra(g, 0);
    CHECK(t.dist[2]->raw() == 2);
}

TEST_CASE("unreachable vertices have no distance") {
    Graph g = parse_graph("2 0\n");
    DistanceTable t = dijkstra(g, 0);
    CHECK(!t.dist[1].has_value());
    CHECK(t.settle_order == std::vector<VertexId>{0});
}

TEST_CASE("dijkstra rejects an out-of-range source") {
    Graph g = parse_graph("2 1\n0 1 5");
    CHECK_THROWS_AS(dijkstra(g, 2), ParameterError);
}

TEST_CASE("partial dijkstra settles the source first") {
    Graph g = parse_graph(kTriangle);
    PartialDijkstra walk(g, 1);
    auto step = walk.step();
    REQUIRE(step);
    CHECK(step->vertex == 1);
    CHECK(step->dist.raw() == 0);
}

TEST_CASE("partial dijkstra walks the path and then exhausts") {
    Graph g = parse_graph("3 2\n0 1 1\n1 2 1");
    PartialDijkstra walk(g, 0);
    VertexId expect[3] = {0, 1, 2};
    for (int i = 0; i < 3; ++i) {
        auto step = walk.step();
        REQUIRE(step);
        CHECK(step->vertex == expect[i]);
        CHECK(step->dist.raw() == static_cast<std::uint64_t>(i));
    }
    CHECK(!walk.step());
}

TEST_CASE("partial dijkstra matches the full settle order") {
    // Oracle equivalence on random graphs, including zero weights and
    // parallel edges via the degree-split transform downstream; here raw.
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Graph g = testutil::connected_gnm(40 + seed * 12, 2 * (40 + seed * 12), seed,
                                          seed % 3 == 0 ? 0 : 1, 7);
        for (VertexId s = 0; s < g.vertex_count(); s += 17) {
            DistanceTable full = dijkstra(g, s);
            PartialDijkstra walk(g, s);
            for (VertexId v : full.settle_order) {
                auto step = walk.step();
                REQUIRE(step);
                CHECK(step->vertex == v);
                CHECK(step->dist == *full.dist[v]);
            }
            CHECK(!walk.step());
        }
    }
}

TEST_CASE("settle order strictly increases under (distance, id)") {
    Graph g = testutil::connected_gnm(120, 360, 5, 1, 3); // many ties
    DistanceTable t = dijkstra(g, 0);
    for (std::size_t i = 1; i < t.settle_order.size(); ++i) {
        const VertexId a = t.settle_order[i - 1];
        const VertexId b = t.settle_order[i];
        const bool increasing =
            *t.dist[a] < *t.dist[b] || (*t.dist[a] == *t.dist[b] && a < b);
        CHECK(increasing);
    }
}

namespace {
template <typename T> concept HasMultiply = requires(T a, T b) { a * b; };
template <typename T> concept HasDivide = requires(T a, T b) { a / b; };
template <typename T> concept HasSubtract = requires(T a, T b) { a - b; };
template <typename T> concept Hashable = requires(T a) { std::hash<T>{}(a); };
} // namespace

TEST_CASE("weights admit only addition and comparison") {
    static_assert(!HasMultiply<Weight>);
    static_assert(!HasDivide<Weight>);
    static_assert(!HasSubtract<Weight>);
    static_assert(!Hashable<Weight>);

    Graph g = testutil::connected_gnm(60, 120, 3);
    WeightAudit audit;
    dijkstra(g, 0);
    CHECK(audit.counts().adds > 0);
    CHECK(audit.counts().compares > 0);
}
