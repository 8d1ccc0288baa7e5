#include <doctest.h>

#include <random>

#include "resweep/generators.hpp"
#include "resweep/modularity.hpp"
#include "test_support.hpp"

using namespace resweep;
using namespace resweep::testing;

TEST_CASE("daisy shape") {
    for (int r = 1; r <= 5; ++r) {
        const Graph g = gen_daisy(r);
        CAPTURE(r);
        REQUIRE(g.num_vertices() == static_cast<std::size_t>(1 + 75 * r));
        CHECK(g.num_edges() == static_cast<std::size_t>(75 * r));
        CHECK(g.total_weight() == 150 * r);
        CHECK(is_connected(g));
        CHECK(g.degree(0) == 25 * r);
        for (int i = 0; i < 25 * r; ++i) {
            const auto hub = static_cast<VertexId>(1 + 3 * i);
            CHECK(g.degree(hub) == 3);
            CHECK(g.weight(0, hub) == 1);
            CHECK(g.degree(hub + 1) == 1);
            CHECK(g.weight(hub, hub + 1) == 1);
            CHECK(g.degree(hub + 2) == 1);
            CHECK(g.weight(hub, hub + 2) == 1);
        }
    }
    CHECK_THROWS_AS(gen_daisy(0), std::invalid_argument);
}

TEST_CASE("daisy reference modularity") {
    CHECK(daisy_reference_q1(1) == doctest::Approx(0.61333).epsilon(1e-5));
    CHECK(daisy_reference_q1(2) == doctest::Approx(0.626667).epsilon(1e-6));
    CHECK(daisy_reference_q1(1000000) == doctest::Approx(0.64).epsilon(1e-6));
    CHECK_THROWS_AS(daisy_reference_q1(0), std::invalid_argument);

    // the partition it refers to: petals alone plus the centre with one petal
    const Graph g = gen_daisy(1);
    std::vector<std::uint64_t> labels(g.num_vertices());
    for (VertexId v = 1; v < g.num_vertices(); ++v) labels[v] = (v - 1) / 3;
    labels[0] = 0;
    CHECK(q_t_exact(g, Partition::from_labels(labels), ExactRatio::from_int(1)) == R(46, 75));
}

TEST_CASE("daisy submodular threshold") {
    CHECK(daisy_submodular_threshold(1, ExactRatio::from_int(1)) == 1);
    CHECK(daisy_submodular_threshold(1, ExactRatio(6, 5)) == 0);
    CHECK(daisy_submodular_threshold(2, ExactRatio::from_int(1)) == 2);
    CHECK(daisy_submodular_threshold(1, ExactRatio(1, 2)) == 7);
    CHECK(daisy_submodular_threshold(1, ExactRatio(4, 5)) == 3);  // 6/(4/5) - 5 = 2.5
    CHECK(daisy_submodular_threshold(1, ExactRatio(1, 100)) == 25);
    CHECK_THROWS_AS(daisy_submodular_threshold(1, ExactRatio{}), std::invalid_argument);
    CHECK_THROWS_AS(daisy_submodular_threshold(1, ExactRatio(5, 4)), std::invalid_argument);
    CHECK_THROWS_AS(daisy_submodular_threshold(0, ExactRatio::from_int(1)), std::invalid_argument);
}

TEST_CASE("daisy threshold matches the pair check between centre block and a petal") {
    // centre block holds the centre and n whole petals; the rest are petals alone
    for (int r = 1; r <= 2; ++r) {
        const Graph g = gen_daisy(r);
        for (const ExactRatio t : {ExactRatio(1, 2), ExactRatio(4, 5), ExactRatio::from_int(1), ExactRatio(11, 10)}) {
            const std::int64_t need = daisy_submodular_threshold(r, t);
            for (std::int64_t n = 0; n < 25 * r; ++n) {
                std::vector<std::uint64_t> labels(g.num_vertices());
                for (VertexId v = 1; v < g.num_vertices(); ++v) {
                    const auto petal = static_cast<std::int64_t>((v - 1) / 3);
                    labels[v] = petal < n ? 0 : static_cast<std::uint64_t>(petal + 1);
                }
                const auto agg = CommunityAggregates::build(g, Partition::from_labels(labels));
                const CommunityId centre = 0, petal = 1;  // the first petal outside the centre block
                CAPTURE(r);
                CAPTURE(n);
                CHECK((mu_t(agg, centre, petal, t) <= 0) == (n >= need));
            }
        }
    }
}

TEST_CASE("complete binary trees") {
    const Graph t1 = gen_complete_binary_tree(1);
    CHECK(t1.num_vertices() == 3);
    CHECK(t1.num_edges() == 2);
    for (int h = 1; h <= 12; ++h) {
        CAPTURE(h);
        const Graph g = gen_complete_binary_tree(h);
        const std::size_t n = (std::size_t{1} << (h + 1)) - 1;
        REQUIRE(g.num_vertices() == n);
        CHECK(g.num_edges() == n - 1);
        CHECK(g.total_weight() == (std::int64_t{1} << (h + 2)) - 4);
        CHECK(is_connected(g));
        CHECK(g.degree(0) == 2);
        for (VertexId v = 1; v < n; ++v) {
            CHECK(g.weight((v - 1) / 2, v) == 1);
            CHECK(g.degree(v) == (2 * v + 1 < n ? 3 : 1));
        }
    }
    CHECK_THROWS_AS(gen_complete_binary_tree(0), std::invalid_argument);
    CHECK_THROWS_AS(gen_complete_binary_tree(31), std::invalid_argument);
}

TEST_CASE("tree bound values") {
    const std::pair<int, double> rows[] = {{3, 0.5357143}, {5, 0.7620968}, {6, 0.8297258}, {10, 0.9562724},
                                           {20, 0.9986194}};
    for (auto [h, expected] : rows) {
        CAPTURE(h);
        const std::int64_t z = (std::int64_t{1} << (h + 2)) - 4;
        CHECK(tree_bound(z).bound == doctest::Approx(expected).epsilon(1e-7));
    }
    const TreeBound daisy = tree_bound(150);
    CHECK(daisy.s_star == 9);
    CHECK(daisy.bound == doctest::Approx(0.782).epsilon(1e-3));
    CHECK(tree_bound(2).s_star == 1);
    CHECK(tree_bound(2).bound == doctest::Approx(0.0));
    CHECK_THROWS_AS(tree_bound(3), std::invalid_argument);
    CHECK_THROWS_AS(tree_bound(0), std::invalid_argument);
}

TEST_CASE("tree bound: s* minimises phi over the integers") {
    for (std::int64_t z = 2; z <= 1000; z += 2) {
        const auto tb = tree_bound(z);
        auto phi = [z](double s) { return 2.0 * (s - 1.0) / static_cast<double>(z) + 1.0 / s; };
        const double best = phi(static_cast<double>(tb.s_star));
        for (std::int64_t s = 1; s <= z; ++s) CHECK_MESSAGE(phi(static_cast<double>(s)) >= best - 1e-15, z);
    }
}

TEST_CASE("reference tree partitions") {
    const std::pair<int, double> rows[] = {{3, 0.505102}, {5, 0.757024}, {6, 0.824263}, {10, 0.9539936},
                                           {20, 0.998536}};
    for (auto [h, expected] : rows) {
        CAPTURE(h);
        const Graph g = gen_complete_binary_tree(h);
        const Partition p = tree_reference_partition(h);
        const int hh = (h - 1) / 2;
        CHECK(p.size() == 1 + (std::size_t{1} << (hh + 1)));
        CHECK(is_internally_connected(g, p));
        CHECK(q_t(g, p, 1.0) == doctest::Approx(expected).epsilon(1e-6));
        CHECK(std::abs(q_t(g, p, 1.0) - expected) < 1e-5);
    }
    CHECK_THROWS_AS(tree_reference_partition(2), std::invalid_argument);
}

TEST_CASE("tree modularity identity") {
    // every internally connected partition of small complete trees
    for (int h = 1; h <= 2; ++h) {
        const Graph g = gen_complete_binary_tree(h);
        for (const Partition& p : all_partitions(g.num_vertices())) {
            if (!is_internally_connected(g, p)) continue;
            const auto [lhs, rhs] = tree_q1_identity_check(g, p);
            CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
        }
    }
    // random trees and random connected partitions
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 2 + rng() % 40;
        const Graph g = random_connected_graph(rng, n, 0.0);
        const Partition p = refine_connected(g, random_partition(rng, n, 1 + rng() % n));
        const auto [lhs, rhs] = tree_q1_identity_check(g, p);
        CHECK(std::abs(lhs - rhs) < 1e-12);
        CHECK(lhs == doctest::Approx(dense_q(g, p, 1).convert_to<double>()));
    }
    const Graph t3 = gen_complete_binary_tree(3);
    const auto whole = tree_q1_identity_check(t3, Partition::whole(t3.num_vertices()));
    CHECK(whole.first == doctest::Approx(0.0));
    CHECK(whole.second == doctest::Approx(0.0));
}

TEST_CASE("tree modularity identity rejects bad input") {
    CHECK_THROWS_AS(tree_q1_identity_check(triangle().graph, Partition::whole(3)), std::invalid_argument);
    const Graph path = graph_from_text("a b 2\nb c\n").graph;
    CHECK_THROWS_AS(tree_q1_identity_check(path, Partition::whole(3)), std::invalid_argument);
    const Graph t1 = gen_complete_binary_tree(1);
    const Partition leaves = Partition::from_blocks(3, {{0}, {1, 2}});
    CHECK_THROWS_AS(tree_q1_identity_check(t1, leaves), std::invalid_argument);
}
