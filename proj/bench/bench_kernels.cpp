// Serial vs OpenMP timings for the data-parallel kernels, plus an engine run.
//
//   bench_kernels [tree_height=18] [oracle_vertices=11]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <random>

#include <omp.h>

#include "resweep/engine.hpp"
#include "resweep/generators.hpp"
#include "resweep/kernels.hpp"
#include "resweep/oracle.hpp"

using clk = std::chrono::steady_clock;

template <typename F>
double time_ms(F&& f, int reps = 5) {
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        auto t0 = clk::now();
        f();
        auto t1 = clk::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

int main(int argc, char** argv) {
    using namespace resweep;
    const int height = argc > 1 ? std::atoi(argv[1]) : 18;
    const int oracle_n = argc > 2 ? std::atoi(argv[2]) : 11;
    std::cout << "threads " << omp_get_max_threads() << '\n';

    const Graph tree = gen_complete_binary_tree(height);
    const Partition blocks = tree_reference_partition(height);
    const auto assign = blocks.assignment();
    kernels::CommunityTotals a, b;
    const double serial = time_ms([&] { a = kernels::community_totals_serial(tree, assign, blocks.size()); });
    const double parallel = time_ms([&] { b = kernels::community_totals_parallel(tree, assign, blocks.size()); });
    std::cout << "community_totals n=" << tree.num_vertices() << " serial " << serial << " ms, parallel " << parallel
              << " ms, match " << (a == b ? "yes" : "NO") << '\n';

    std::mt19937_64 rng(7);
    GraphBuilder gb(oracle_n);
    for (int u = 0; u < oracle_n; ++u) {
        gb.add_edge(u, (u + 1) % oracle_n, 1);
        for (int v = u + 2; v < oracle_n; ++v)
            if (rng() % 3 == 0) gb.add_edge(u, v, 1 + static_cast<Weight>(rng() % 3));
    }
    const Graph small = std::move(gb).build();
    OracleResult os, op;
    const ExactRatio one = ExactRatio::from_int(1);
    const double oserial = time_ms([&] { os = optimal_q_serial(small, one); }, 1);
    const double oparallel = time_ms([&] { op = optimal_q_parallel(small, one); }, 1);
    std::cout << "oracle n=" << oracle_n << " (" << os.partitions_examined << " partitions) serial " << oserial
              << " ms, parallel " << oparallel << " ms, match "
              << (os.best_partition == op.best_partition && os.best_q_exact == op.best_q_exact ? "yes" : "NO")
              << '\n';

    DetectResult res;
    const double engine = time_ms([&] { res = detect(tree); }, 1);
    std::cout << "detect tree height " << height << ": " << engine << " ms, k=" << res.partition.size()
              << ", q_1=" << res.trace.back().q_1 << '\n';
}
