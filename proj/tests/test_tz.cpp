#include "doctest.h"

#include <cmath>

#include "oracle_helpers.hpp"

#include "growball/errors.hpp"
#include "growball/tz.hpp"

using namespace growball;

namespace {

std::vector<VertexId> all_vertices(const Graph& g) {
    std::vector<VertexId> out(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) out[v] = v;
    return out;
}

// Runs grow_all_step from size 1 upward and compares every bunch against the
// brute-force nearest lists, tie order and distances included.
void check_grow_exactness(const Graph& g, const std::vector<VertexId>& universe,
                          std::size_t max_size) {
    auto brute = testutil::brute_nearest_lists(g, universe);
    LevelState st = make_level_state(g, universe);
    for (std::size_t size = 1; size <= max_size; ++size) {
        if (size > 1) grow_all_step(g, st);
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            const std::size_t expect = std::min(size, brute[v].size());
            REQUIRE(st.bunch[v].size() == expect);
            for (std::size_t i = 0; i < expect; ++i) {
                CHECK(st.bunch[v][i].vertex == brute[v][i].vertex);
                CHECK(st.bunch[v][i].dist == brute[v][i].dist);
            }
            CHECK(static_cast<bool>(st.full[v]) == (expect == brute[v].size()));
        }
    }
}

} // namespace

TEST_CASE("nearest_in_set basics") {
    Graph path = parse_graph("4 3\n0 1 1\n1 2 1\n2 3 1");

    SUBCASE("singleton set") {
        auto nearest = nearest_in_set(path, std::vector<VertexId>{2});
        for (VertexId v = 0; v < 4; ++v) {
            REQUIRE(nearest[v]);
            CHECK(nearest[v]->vertex == 2);
        }
        CHECK(nearest[0]->dist.raw() == 2);
    }
    SUBCASE("two endpoints") {
        auto nearest = nearest_in_set(path, std::vector<VertexId>{0, 3});
        CHECK(nearest[1]->vertex == 0);
        CHECK(nearest[1]->dist.raw() == 1);
        CHECK(nearest[2]->vertex == 3);
        CHECK(nearest[2]->dist.raw() == 1);
    }
    SUBCASE("every vertex is its own nearest") {
        auto nearest = nearest_in_set(path, all_vertices(path));
        for (VertexId v = 0; v < 4; ++v) {
            CHECK(nearest[v]->vertex == v);
            CHECK(nearest[v]->dist.raw() == 0);
        }
    }
    SUBCASE("empty set is rejected") {
        CHECK_THROWS_AS(nearest_in_set(path, std::vector<VertexId>{}), ParameterError);
    }
}

TEST_CASE("grow step on the unit path with endpoints as universe") {
    Graph g = parse_graph("3 2\n0 1 1\n1 2 1");
    LevelState st = make_level_state(g, {0, 2});
    REQUIRE(st.bunch[1].size() == 1);
    CHECK(st.bunch[1][0].vertex == 0); // tie with 2 broken by id
    grow_all_step(g, st);
    REQUIRE(st.bunch[1].size() == 2);
    CHECK(st.bunch[1][1].vertex == 2);
    CHECK(st.bunch[1][1].dist.raw() == 1);
}

TEST_CASE("grow step on a single heavy edge") {
    Graph g = parse_graph("2 1\n0 1 5");
    LevelState st = make_level_state(g, {0, 1});
    grow_all_step(g, st);
    REQUIRE(st.bunch[0].size() == 2);
    REQUIRE(st.bunch[1].size() == 2);
    CHECK(st.bunch[0][1].vertex == 1);
    CHECK(st.bunch[0][1].dist.raw() == 5);
    CHECK(st.bunch[1][1].vertex == 0);
    CHECK(st.bunch[1][1].dist.raw() == 5);
}

TEST_CASE("bunches spanning the universe are flagged full and left alone") {
    Graph g = parse_graph("3 3\n0 1 1\n1 2 1\n0 2 1");
    LevelState st = make_level_state(g, {1});
    CHECK(st.full[0]);
    CHECK(st.full[1]);
    CHECK(st.full[2]);
    grow_all_step(g, st); // no-op
    CHECK(st.bunch[0].size() == 1);
}

TEST_CASE("grow exactness against brute force, with heavy ties") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const std::size_t n = 30 + seed * 10;
        Graph g = testutil::connected_gnm(n, 3 * n, seed, 1, 4);
        Rng rng(seed * 1000);
        std::vector<VertexId> universe;
        for (VertexId v = 0; v < n; ++v)
            if (rng.below(3) == 0) universe.push_back(v);
        if (universe.empty()) universe.push_back(0);
        check_grow_exactness(g, universe, std::min<std::size_t>(universe.size(), 8));
    }
}

TEST_CASE("grow exactness when the universe is everything") {
    Graph g = testutil::connected_gnm(50, 120, 77, 1, 3);
    check_grow_exactness(g, all_vertices(g), 6);
}

TEST_CASE("unhit growth equals full growth restricted to unhit vertices") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const std::size_t n = 40 + seed * 8;
        Graph g = testutil::connected_gnm(n, 2 * n, seed + 50, 1, 6);
        std::vector<VertexId> universe = all_vertices(g);
        auto brute = testutil::brute_nearest_lists(g, universe);
        Rng rng(seed);
        const std::size_t j = 2 + rng.below(4);

        // Plant two centers; every bunch whose j-prefix contains one is hit
        // and frozen at a size that still contains it.
        const VertexId c1 = static_cast<VertexId>(rng.below(n));
        const VertexId c2 = static_cast<VertexId>(rng.below(n));

        LevelState full_state;
        full_state.universe = universe;
        full_state.bunch.assign(n, {});
        full_state.hit.assign(n, 0);
        LevelState mixed = full_state;
        for (VertexId v = 0; v < n; ++v) {
            const std::size_t take = std::min(j, brute[v].size());
            full_state.bunch[v].assign(brute[v].begin(), brute[v].begin() + take);
            std::size_t center_pos = take;
            for (std::size_t i = 0; i < take; ++i)
                if (brute[v][i].vertex == c1 || brute[v][i].vertex == c2) {
                    center_pos = i;
                    break;
                }
            if (center_pos < take) {
                mixed.hit[v] = 1;
                const std::size_t freeze = center_pos + 1 + rng.below(take - center_pos);
                mixed.bunch[v].assign(brute[v].begin(), brute[v].begin() + freeze);
            } else {
                mixed.bunch[v] = full_state.bunch[v];
            }
        }
        refresh_derived(g, full_state);
        refresh_derived(g, mixed);

        grow_all_step(g, full_state);
        grow_unhit_step(g, mixed);

        for (VertexId v = 0; v < n; ++v) {
            if (mixed.hit[v]) continue;
            REQUIRE(mixed.bunch[v].size() == full_state.bunch[v].size());
            for (std::size_t i = 0; i < mixed.bunch[v].size(); ++i)
                CHECK(testutil::entries_equal(mixed.bunch[v][i], full_state.bunch[v][i]));
        }
    }
}

TEST_CASE("unhit growth with no hit vertices reduces to full growth") {
    Graph g = testutil::connected_gnm(30, 60, 5);
    LevelState a = make_level_state(g, all_vertices(g));
    LevelState b = make_level_state(g, all_vertices(g));
    grow_all_step(g, a);
    grow_unhit_step(g, b);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        REQUIRE(a.bunch[v].size() == b.bunch[v].size());
        for (std::size_t i = 0; i < a.bunch[v].size(); ++i)
            CHECK(testutil::entries_equal(a.bunch[v][i], b.bunch[v][i]));
    }
}

TEST_CASE("unhit growth with everything hit is a no-op") {
    Graph g = parse_graph("3 2\n0 1 1\n1 2 1");
    LevelState st = make_level_state(g, {0, 1, 2});
    st.hit.assign(3, 1);
    grow_unhit_step(g, st);
    for (VertexId v = 0; v < 3; ++v) CHECK(st.bunch[v].size() == 1);
}

TEST_CASE("grow step rejects unequal growable sizes") {
    Graph g = parse_graph("3 2\n0 1 1\n1 2 1");
    LevelState st = make_level_state(g, {0, 1, 2});
    st.bunch[1].push_back({0, Weight::of(1)});
    refresh_derived(g, st);
    CHECK_THROWS_AS(grow_all_step(g, st), ContractError);
}

TEST_CASE("build_level budget arithmetic") {
    Graph g = testutil::connected_gnm(16, 32, 4);
    auto result = build_level(g, all_vertices(g), 2);
    CHECK(result.selection.r == 4); // ceil(16 / 16^{1/2})
    CHECK(result.next_level.size() <= 4);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        REQUIRE(result.pivots[v]);
        CHECK(result.pivots[v]->vertex == v); // level set is everything
    }
}

TEST_CASE("build_level with a singleton universe") {
    Graph g = parse_graph("3 2\n0 1 2\n1 2 2");
    std::vector<VertexId> owners = {0, 1, 2};
    auto result = build_level(g, std::vector<VertexId>{1}, owners, 1);
    CHECK(result.next_level == std::vector<VertexId>{1});
    for (VertexId v = 0; v < 3; ++v) {
        REQUIRE(result.bunches[v].size() == 1);
        CHECK(result.bunches[v][0].vertex == 1);
    }
}

TEST_CASE("k=1 oracle is exact") {
    Graph g = testutil::connected_gnm(24, 50, 9);
    TzBuild build = build_oracle(g, 1);
    auto truth = testutil::all_pairs(g);
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = 0; v < g.vertex_count(); ++v) {
            auto estimate = build.oracle.query(u, v);
            REQUIRE(estimate);
            CHECK(*estimate == *truth[u].dist[v]);
        }
}

TEST_CASE("k=2 oracle on a 4x4 grid stays within stretch 3") {
    GeneratorSpec spec;
    spec.family = GeneratorSpec::Family::Grid;
    spec.n = 16;
    spec.seed = 3;
    Graph g = generate(spec);
    TzBuild build = build_oracle(g, 2);
    auto truth = testutil::all_pairs(g);
    for (VertexId u = 0; u < 16; ++u)
        for (VertexId v = 0; v < 16; ++v) {
            auto estimate = build.oracle.query(u, v);
            REQUIRE(estimate);
            CHECK(estimate->raw() >= truth[u].dist[v]->raw());
            CHECK(estimate->raw() <= 3 * truth[u].dist[v]->raw());
        }
    for (const TzLevelStats& lvl : build.stats.levels)
        CHECK(lvl.centers <= lvl.budget);
    CHECK(static_cast<double>(build.stats.stored_pairs) <= build.stats.size_bound);
}

TEST_CASE("query(v, v) is zero and out-of-range queries throw") {
    Graph g = testutil::connected_gnm(20, 40, 2);
    TzBuild build = build_oracle(g, 3);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        CHECK(build.oracle.query(v, v)->raw() == 0);
    CHECK_THROWS_AS(build.oracle.query(0, 100), ParameterError);
}

TEST_CASE("pivot distances never decrease across levels") {
    Graph g = testutil::connected_gnm(60, 140, 8);
    TzBuild build = build_oracle(g, 3);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        for (std::uint32_t i = 1; i < 3; ++i) {
            REQUIRE(build.oracle.pivots[i][v].present);
            CHECK(build.oracle.pivots[i - 1][v].dist <= build.oracle.pivots[i][v].dist);
        }
}

TEST_CASE("single vertex, k=3") {
    Graph g = parse_graph("1 0\n");
    TzBuild build = build_oracle(g, 3);
    CHECK(build.oracle.query(0, 0)->raw() == 0);
}

TEST_CASE("disconnected graphs answer per component") {
    Graph g = parse_graph("6 4\n0 1 2\n1 2 2\n3 4 2\n4 5 2");
    TzBuild build = build_oracle(g, 2);
    CHECK(!build.oracle.query(0, 4).has_value());
    auto same_side = build.oracle.query(0, 2);
    REQUIRE(same_side);
    CHECK(same_side->raw() >= 4);
    CHECK(same_side->raw() <= 12);
}

TEST_CASE("zero-weight edges are rejected by oracle construction") {
    Graph g = parse_graph("3 2\n0 1 0\n1 2 1");
    CHECK_THROWS_AS(build_oracle(g, 2), ParameterError);
    CHECK_THROWS_AS(make_level_state(g, {0, 1}), ParameterError);
}

TEST_CASE("snapshot round trip is byte-exact and validated") {
    Graph g = testutil::connected_gnm(30, 70, 13);
    TzBuild build = build_oracle(g, 2);
    std::string bytes = serialize_oracle(build.oracle);
    Oracle reloaded = deserialize_oracle(bytes);
    CHECK(serialize_oracle(reloaded) == bytes);
    for (VertexId u = 0; u < g.vertex_count(); u += 3)
        for (VertexId v = 0; v < g.vertex_count(); v += 5)
            CHECK(*reloaded.query(u, v) == *build.oracle.query(u, v));

    std::string bad_magic = bytes;
    bad_magic[0] = 'X';
    CHECK_THROWS_AS(deserialize_oracle(bad_magic), ParseError);
    CHECK_THROWS_AS(deserialize_oracle(bytes.substr(0, bytes.size() / 2)), ParseError);
}

TEST_CASE("identical inputs produce identical oracles") {
    Graph g = testutil::connected_gnm(40, 90, 21);
    CHECK(serialize_oracle(build_oracle(g, 3).oracle) ==
          serialize_oracle(build_oracle(g, 3).oracle));
}
