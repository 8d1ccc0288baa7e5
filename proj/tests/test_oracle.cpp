#include <doctest.h>

#include <random>

#include "resweep/engine.hpp"
#include "resweep/errors.hpp"
#include "resweep/modularity.hpp"
#include "resweep/oracle.hpp"
#include "test_support.hpp"

using namespace resweep;
using namespace resweep::testing;

TEST_CASE("oracle examples") {
    auto b = barbell();
    const auto rb = optimal_q(b.graph, ExactRatio::from_int(1));
    CHECK(rb.best_q_exact == R(5, 14));
    CHECK(rb.best_q == doctest::Approx(5.0 / 14));
    CHECK(rb.best_partition == blocks_of(b, {{"a", "b", "c"}, {"d", "e", "f"}}));
    CHECK(rb.partitions_examined == bell_number(6));

    auto t = triangle();
    const auto rt = optimal_q(t.graph, ExactRatio::from_int(1));
    CHECK(rt.best_q_exact == 0);
    CHECK(rt.best_partition == Partition::whole(3));

    auto two = two_triangles();
    const auto r2 = optimal_q(two.graph, ExactRatio::from_int(1));
    CHECK(r2.best_q_exact == R(1, 2));
    CHECK(r2.best_partition == connected_components(two.graph));

    // high resolution favours singletons on the triangle: Q = -t/3 vs 1 - t
    CHECK(optimal_q(t.graph, ExactRatio::from_int(3)).best_q_exact == R(-1));
    CHECK(optimal_q(t.graph, ExactRatio::from_int(3)).best_partition == Partition::singletons(3));
}

TEST_CASE("Bell numbers") {
    const std::uint64_t expected[] = {1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597};
    for (int n = 0; n <= 12; ++n) CHECK(bell_number(n) == expected[n]);
    for (std::size_t n = 1; n <= 7; ++n) CHECK(all_partitions(n).size() == bell_number(static_cast<int>(n)));
}

TEST_CASE("oracle agrees with brute force over all partitions") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + rng() % 7;
        Graph g = trial % 3 == 0 ? random_graph(rng, n, 0.3, 3) : random_connected_graph(rng, n, 0.3, 3, true);
        const ExactRatio t(1 + rng() % 30, 1 + rng() % 10);
        const auto res = optimal_q(g, t);
        Rational best = dense_q(g, Partition::whole(n), t.to_rational());
        for (const Partition& p : all_partitions(n)) best = std::max(best, dense_q(g, p, t.to_rational()));
        CHECK(res.best_q_exact == best);
        CHECK(dense_q(g, res.best_partition, t.to_rational()) == best);
        CHECK(res.partitions_examined == bell_number(static_cast<int>(n)));
        CHECK(std::abs(res.best_q - best.convert_to<double>()) < 1e-12);
    }
}

TEST_CASE("serial and parallel oracle agree") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 7 + rng() % 4;
        Graph g = random_connected_graph(rng, n, 0.25);
        const ExactRatio t(1 + rng() % 15, 10);
        const auto s = optimal_q_serial(g, t), p = optimal_q_parallel(g, t);
        CHECK(s.best_q_exact == p.best_q_exact);
        CHECK(s.best_partition == p.best_partition);
        CHECK(s.partitions_examined == p.partitions_examined);
    }
}

TEST_CASE("optimal partitions are submodular and beat the engine") {
    std::mt19937_64 rng(63);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 1 + rng() % 9;
        Graph g = random_connected_graph(rng, n, 0.3, 2);
        const ExactRatio t(1 + rng() % 15, 10);
        const auto best = optimal_q(g, t);
        CHECK(is_submodular(g, best.best_partition, t).submodular);
        DetectOptions opts;
        opts.t_min = t;
        CHECK(q_t_exact(g, detect(g, opts).partition, t) <= best.best_q_exact);
    }
}

TEST_CASE("exhaustive weak optimality matches submodularity") {
    std::mt19937_64 rng(64);
    int agree_true = 0, agree_false = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        Graph g = random_connected_graph(rng, n, 0.3, 3);
        const Partition p = random_partition(rng, n, 1 + rng() % n);
        ExactRatio t(1 + rng() % 20, 10);
        const auto agg = CommunityAggregates::build(g, p);
        if (trial % 2 == 0 && !partition_resolution(agg).is_zero()) t = partition_resolution(agg);
        const bool sub = is_submodular(agg, t).submodular;
        REQUIRE(verify_weak_optimality_exhaustive(g, p, t) == sub);
        (sub ? agree_true : agree_false)++;
    }
    CHECK(agree_true > 50);
    CHECK(agree_false > 50);
}

TEST_CASE("oracle limits") {
    std::mt19937_64 rng(65);
    Graph big = random_connected_graph(rng, 13, 0.2);
    CHECK_THROWS_AS(optimal_q(big, ExactRatio::from_int(1)), SizeLimitError);
    CHECK_THROWS_AS(verify_weak_optimality_exhaustive(big, Partition::singletons(13), ExactRatio::from_int(1)),
                    SizeLimitError);
    // 13 vertices but few blocks is fine
    CHECK(verify_weak_optimality_exhaustive(big, Partition::whole(13), ExactRatio::from_int(1)));
    auto t = triangle();
    CHECK_THROWS_AS(optimal_q(t.graph, ExactRatio(u128{1} << 41, 1)), SizeLimitError);
    CHECK_THROWS_AS(optimal_q(t.graph, ExactRatio{}), std::invalid_argument);
}
