#include <doctest.h>

#include <random>
#include <sstream>

#include "resweep/errors.hpp"
#include "resweep/generators.hpp"
#include "resweep/graph.hpp"
#include "resweep/measures.hpp"
#include "resweep/partition.hpp"
#include "test_support.hpp"

using namespace resweep;
using namespace resweep::testing;

TEST_CASE("load_edge_list: triangle") {
    auto g = triangle();
    CHECK(g.graph.num_vertices() == 3);
    CHECK(g.graph.num_edges() == 3);
    CHECK(g.graph.total_weight() == 6);
    for (VertexId v = 0; v < 3; ++v) CHECK(g.graph.degree(v) == 2);
    CHECK(g.labels == std::vector<std::string>{"a", "b", "c"});
}

TEST_CASE("load_edge_list: weights, comments, duplicates and loops") {
    auto g = graph_from_text("# header\na b 3\n\n");
    CHECK(g.graph.weight(0, 1) == 3);
    CHECK(g.graph.weight(1, 0) == 3);
    CHECK(g.graph.total_weight() == 6);

    auto dup = graph_from_text("a b 2 # trailing comment\nb a 1\n");
    CHECK(dup.graph.weight(0, 1) == 3);
    CHECK(dup.graph.num_edges() == 1);

    auto loop = graph_from_text("a b\nb b 2\n");
    CHECK(loop.graph.loop_weight(1) == 4);  // stored doubled
    CHECK(loop.graph.degree(1) == 5);
    CHECK(loop.graph.total_weight() == 6);
    CHECK(loop.graph.num_edges() == 1);
}

TEST_CASE("load_edge_list: errors carry the line number") {
    auto expect_line = [](const std::string& text, std::size_t line) {
        try {
            graph_from_text(text);
            FAIL("expected FormatError");
        } catch (const FormatError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_line("a b\nb c 1.5\n", 2);
    expect_line("a b 0\n", 1);
    expect_line("a b -2\n", 1);
    expect_line("a\n", 1);
    expect_line("a b 1 x\n", 1);
    CHECK_THROWS_AS(graph_from_text("# nothing\n"), FormatError);
}

TEST_CASE("builder rejects isolated vertices") {
    GraphBuilder b(3);
    b.add_edge(0, 1, 1);
    CHECK_THROWS_AS(std::move(b).build(), IsolatedVertexError);
    GraphBuilder looped(2);
    looped.add_edge(0, 1, 1);
    CHECK_NOTHROW(std::move(looped).build());
}

TEST_CASE("karate fixture") {
    auto g = karate();
    CHECK(g.graph.num_vertices() == 34);
    CHECK(g.graph.num_edges() == 78);
    CHECK(g.graph.total_weight() == 156);
    CHECK(g.graph.degree(g.index.at("34")) == 17);
    CHECK(g.graph.degree(g.index.at("1")) == 16);
}

TEST_CASE("write_edge_list round-trips") {
    auto g = graph_from_text("x y 2\ny z\nz z 3\n");
    std::ostringstream out;
    write_edge_list(out, g);
    auto back = graph_from_text(out.str());
    CHECK(back.labels == g.labels);
    for (VertexId u = 0; u < 3; ++u)
        for (VertexId v = 0; v < 3; ++v) CHECK(back.graph.weight(u, v) == g.graph.weight(u, v));
}

TEST_CASE("graph invariants on random graphs") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 20;
        Graph g = random_connected_graph(rng, n, 0.3, 5, true);
        Weight sum = 0;
        for (VertexId u = 0; u < n; ++u) {
            sum += g.degree(u);
            CHECK(g.degree(u) > 0);
            for (VertexId v = 0; v < n; ++v) REQUIRE(g.weight(u, v) == g.weight(v, u));
        }
        CHECK(sum == g.total_weight());
    }
}

TEST_CASE("quotient") {
    auto t = triangle();
    SUBCASE("singletons give an isomorphic copy") {
        Graph q = quotient(t.graph, Partition::singletons(3));
        for (VertexId u = 0; u < 3; ++u)
            for (VertexId v = 0; v < 3; ++v) CHECK(q.weight(u, v) == t.graph.weight(u, v));
    }
    SUBCASE("whole partition collapses to one loop of weight Z") {
        Graph q = quotient(t.graph, Partition::whole(3));
        CHECK(q.num_vertices() == 1);
        CHECK(q.loop_weight(0) == 6);
        CHECK(q.total_weight() == 6);
    }
    SUBCASE("barbell split into its triangles") {
        auto b = barbell();
        Graph q = quotient(b.graph, blocks_of(b, {{"a", "b", "c"}, {"d", "e", "f"}}));
        CHECK(q.num_vertices() == 2);
        CHECK(q.loop_weight(0) == 6);
        CHECK(q.loop_weight(1) == 6);
        CHECK(q.weight(0, 1) == 1);
        CHECK(q.weight(1, 0) == 1);
        CHECK(q.total_weight() == 14);
    }
}

TEST_CASE("quotient preserves Z, degree sums and symmetry") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 49;
        Graph g = random_connected_graph(rng, n, 0.1, 4, true);
        Partition p = random_partition(rng, n, 1 + rng() % n);
        Graph q = quotient(g, p);
        CHECK(q.total_weight() == g.total_weight());
        for (CommunityId c = 0; c < p.size(); ++c) {
            Weight d = 0;
            for (VertexId v : p.block(c)) d += g.degree(v);
            CHECK(q.degree(c) == d);
            for (CommunityId c2 = 0; c2 < p.size(); ++c2) REQUIRE(q.weight(c, c2) == q.weight(c2, c));
        }
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(triangle().graph).size() == 1);
    auto two = two_triangles();
    Partition cc = connected_components(two.graph);
    CHECK(cc.size() == 2);
    CHECK(cc.block(0).size() == 3);
    CHECK(cc.block(1).size() == 3);
    CHECK(connected_components(gen_daisy(1)).size() == 1);
    // loops do not connect anything
    auto looped = graph_from_text("a a\nb b\n");
    CHECK(connected_components(looped.graph).size() == 2);
}

TEST_CASE("min_cut examples") {
    CHECK(min_cut(barbell().graph) == 1);
    CHECK(min_cut(triangle().graph) == 2);
    for (int h = 1; h <= 6; ++h) CHECK(min_cut(gen_complete_binary_tree(h)) == 1);
    CHECK_THROWS_AS(min_cut(two_triangles().graph), DisconnectedError);
    CHECK_THROWS_AS(min_cut(graph_from_text("a a\n").graph), std::invalid_argument);
}

TEST_CASE("min_cut matches brute force on random connected graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 11;
        Graph g = random_connected_graph(rng, n, 0.1 + 0.5 * (trial % 3), 6, trial % 2 == 0);
        REQUIRE(min_cut(g) == brute_min_cut(g));
    }
}

TEST_CASE("min cut value is the one-orientation cut mass") {
    // Z m_E(S x S^c) = c*, and the symmetric off-diagonal mass is 2c*
    auto b = barbell();
    const Partition sides = blocks_of(b, {{"a", "b", "c"}, {"d", "e", "f"}});
    const auto agg = CommunityAggregates::build(b.graph, sides);
    const Weight c = min_cut(b.graph);
    CHECK(ExactRatio(b.graph.total_weight(), 1).to_rational() * edge_measure(agg, 0, 1).to_rational() == c);
    CHECK(b.graph.total_weight() - agg.diagonal_weight() == 2 * c);
}
