#pragma once

#include <span>

#include "resweep/graph.hpp"
#include "resweep/partition.hpp"

namespace resweep {

/// Components of the subgraph keeping only edges inside a block of `assign`
/// (all edges when `assign` is empty).
Partition components_within(const Graph& g, std::span<const CommunityId> assign);

}  // namespace resweep
