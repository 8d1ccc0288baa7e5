#pragma once

#include <span>
#include <vector>

#include "resweep/graph.hpp"
#include "resweep/partition.hpp"

namespace resweep::kernels {

/// Per-community d(C) and internal weight w(C) = sum_{v,v' in C} m(v,v').
struct CommunityTotals {
    std::vector<Weight> degree;
    std::vector<Weight> internal;

    friend bool operator==(const CommunityTotals&, const CommunityTotals&) = default;
};

/// Reference implementation, one pass over the adjacency rows.
CommunityTotals community_totals_serial(const Graph& g, std::span<const CommunityId> assign, std::size_t k);

/// OpenMP version: vertices split across threads, per-thread arrays reduced.
CommunityTotals community_totals_parallel(const Graph& g, std::span<const CommunityId> assign, std::size_t k);

/// Picks the parallel kernel for large graphs.
CommunityTotals community_totals(const Graph& g, const Partition& p);

inline constexpr std::size_t kParallelVertexThreshold = 1 << 14;

}  // namespace resweep::kernels
