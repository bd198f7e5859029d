#include "doctest.h"

#include "growball/errors.hpp"
#include "growball/generators.hpp"
#include "growball/graph.hpp"

using namespace growball;

TEST_CASE("parse smallest valid document") {
    Graph g = parse_graph("2 1\n0 1 5");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.edges()[0].a == 0);
    CHECK(g.edges()[0].b == 1);
    CHECK(g.edges()[0].weight.raw() == 5);
    CHECK(g.neighbors(0).size() == 1);
    CHECK(g.neighbors(1).size() == 1);
    CHECK(g.neighbors(1)[0].neighbor == 0);
}

TEST_CASE("parse rejects negative weight") {
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 -3"), ValidationError);
}

TEST_CASE("parse reports the offending line") {
    try {
        parse_graph("3 2\n0 1 1\n0 2");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("parse tolerates comments and keeps parallel edges") {
    Graph g = parse_graph("# a triangle with a doubled edge\n3 4\n0 1 1\n1 2 1\n0 2 5\n0 2 7\n");
    CHECK(g.edge_count() == 4);
    CHECK(g.neighbors(0).size() == 3);
    CHECK(g.neighbors(2).size() == 3);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_graph(""), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 2 1"), ParseError);      // endpoint out of range
    CHECK_THROWS_AS(parse_graph("2 2\n0 1 1"), ParseError);      // edge count mismatch
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 1 9"), ParseError);    // trailing token
    CHECK_THROWS_AS(parse_graph("2 1\n0 x 1"), ParseError);      // junk token
    CHECK_THROWS_AS(parse_graph("2 1\n-1 0 5"), ParseError);     // malformed endpoint
    CHECK_THROWS_AS(parse_graph("2 1\n0 1 99999999999"), ValidationError); // weight cap
}

TEST_CASE("self-loop appears once in its adjacency list") {
    Graph g = parse_graph("2 2\n0 0 4\n0 1 1");
    CHECK(g.neighbors(0).size() == 2);
    CHECK(g.degree(1) == 1);
}

TEST_CASE("format/parse round trip on generated graphs") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        GeneratorSpec spec;
        spec.family = GeneratorSpec::Family::RandomGnm;
        spec.n = 30 + seed;
        spec.m = 60;
        spec.seed = seed;
        Graph g = generate(spec);
        Graph back = parse_graph(format_graph(g));
        REQUIRE(back.vertex_count() == g.vertex_count());
        REQUIRE(back.edge_count() == g.edge_count());
        for (std::size_t e = 0; e < g.edge_count(); ++e) {
            CHECK(back.edges()[e].a == g.edges()[e].a);
            CHECK(back.edges()[e].b == g.edges()[e].b);
            CHECK(back.edges()[e].weight == g.edges()[e].weight);
        }
    }
}

TEST_CASE("connected components") {
    Graph g = parse_graph("5 2\n0 1 1\n3 4 1");
    ComponentMap comps = connected_components(g);
    CHECK(comps.count == 3);
    CHECK(comps.component_of[0] == comps.component_of[1]);
    CHECK(comps.component_of[3] == comps.component_of[4]);
    CHECK(comps.component_of[2] != comps.component_of[0]);
    CHECK(comps.component_of[2] != comps.component_of[3]);
}
