#pragma once

#include <cstdint>
#include <utility>

#include "resweep/exact.hpp"
#include "resweep/graph.hpp"
#include "resweep/partition.hpp"

namespace resweep {

/// Star centre of degree 25r; each of the 25r petals is a hub joined to the
/// centre plus two leaves hanging off the hub. Vertex 0 is the centre, then
/// petals in order as (hub, leaf, leaf). Z = 150r.
Graph gen_daisy(int r);

/// Optimal Newman modularity of the daisy, (4/25)(4 - 1/(6r)).
double daisy_reference_q1(int r);

/// Smallest n >= r(6/t - 5), clamped to [0, 25r]: the number of petals the
/// centre community must hold for (centre community, petal) to be submodular.
/// Requires 0 < t <= 6/5.
std::int64_t daisy_submodular_threshold(int r, const ExactRatio& t);

/// Complete binary tree of the given height, vertices numbered breadth first
/// from the root (children of v are 2v+1 and 2v+2). Z = 2^(height+2) - 4.
Graph gen_complete_binary_tree(int height);

/// Upper bound 1 - phi(s*) on the Newman modularity of any tree with total
/// weight Z, where phi(s) = 2(s-1)/Z + 1/s and s* = floor((1 + sqrt(1+2Z))/2).
struct TreeBound {
    std::int64_t z = 0;
    std::int64_t s_star = 0;
    double bound = 0;
};
TreeBound tree_bound(std::int64_t z);

/// The root subtree of height h = ceil((height-2)/2) plus each subtree
/// hanging below it: 1 + 2^(h+1) blocks.
Partition tree_reference_partition(int height);

/// Both sides of the tree modularity identity
/// Q_1 = 1 - 2(k-1)/Z - 1/k - sum_C (m_V(C) - 1/k)^2
/// for an internally connected partition of a tree. lhs is computed by q_t.
std::pair<double, double> tree_q1_identity_check(const Graph& tree, const Partition& p);

}  // namespace resweep
