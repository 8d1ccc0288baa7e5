#pragma once

#include <cstdint>

#include "resweep/exact.hpp"
#include "resweep/graph.hpp"
#include "resweep/partition.hpp"

namespace resweep {

inline constexpr std::size_t kOracleMaxBlocks = 12;

struct OracleResult {
    double best_q = 0;
    Rational best_q_exact;
    /// First maximiser in restricted-growth-string order.
    Partition best_partition;
    std::uint64_t partitions_examined = 0;
};

/// Exhaustive maximum of Q_t over all Bell(n) partitions. Throws
/// SizeLimitError for n > 12 or when Z or t are too large for exact 128-bit scoring.
OracleResult optimal_q(const Graph& g, const ExactRatio& t);
/// Reference path: a single depth-first walk over restricted growth strings.
OracleResult optimal_q_serial(const Graph& g, const ExactRatio& t);
/// OpenMP path: the walk is split by fixed-length prefixes, reduced by
/// (score, prefix order) so the result equals the serial one.
OracleResult optimal_q_parallel(const Graph& g, const ExactRatio& t);

/// Checks Q_t(D) <= Q_t(p) for every coarsening D of p by enumeration over
/// partitions of p's blocks. Throws SizeLimitError when p has more than 12 blocks.
bool verify_weak_optimality_exhaustive(const Graph& g, const Partition& p, const ExactRatio& t);

std::uint64_t bell_number(int n);

}  // namespace resweep
