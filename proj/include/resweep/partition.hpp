#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "resweep/graph.hpp"

namespace resweep {

using CommunityId = std::uint32_t;

/// Strict partition of {0..n-1} into nonempty blocks.
///
/// Community ids are dense and canonical: block 0 holds vertex 0, and blocks
/// are numbered in order of their smallest vertex. Two partitions with the
/// same blocks therefore compare equal.
class Partition {
public:
    Partition() = default;

    static Partition singletons(std::size_t n);
    static Partition whole(std::size_t n);
    /// Any labelling of vertices; ids are renumbered canonically.
    static Partition from_labels(std::span<const std::uint64_t> labels);
    static Partition from_blocks(std::size_t n, const std::vector<std::vector<VertexId>>& blocks);

    std::size_t num_vertices() const noexcept { return assign_.size(); }
    std::size_t size() const noexcept { return offsets_.size() - 1; }
    CommunityId community_of(VertexId v) const { return assign_[v]; }
    std::span<const CommunityId> assignment() const noexcept { return assign_; }
    /// Members of block c in increasing order.
    std::span<const VertexId> block(CommunityId c) const {
        return {members_.data() + offsets_[c], members_.data() + offsets_[c + 1]};
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    explicit Partition(std::vector<CommunityId> canonical_assign);
    std::vector<CommunityId> assign_;
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> members_;
};

Partition singleton_partition(const Graph& g);

/// True iff every block of `finer` lies inside a block of `coarser`
/// (finer is a refinement of coarser). Throws std::invalid_argument on a
/// vertex-count mismatch.
bool refines(const Partition& coarser, const Partition& finer);

/// Splits each block into the connected components of its induced subgraph.
Partition refine_connected(const Graph& g, const Partition& p);
bool is_internally_connected(const Graph& g, const Partition& p);

/// "label communityId" per line, in vertex order.
void write_partition(std::ostream& out, const LabeledGraph& g, const Partition& p);
/// Every vertex of g must appear exactly once; ids are arbitrary non-negative integers.
Partition read_partition(std::istream& in, const LabeledGraph& g);
Partition read_partition_file(const std::string& path, const LabeledGraph& g);

}  // namespace resweep
