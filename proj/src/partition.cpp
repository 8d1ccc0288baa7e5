#include "resweep/partition.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "detail.hpp"

namespace resweep {

Partition::Partition(std::vector<CommunityId> canonical_assign) : assign_(std::move(canonical_assign)) {
    CommunityId k = 0;
    for (CommunityId c : assign_) k = std::max<CommunityId>(k, c + 1);
    offsets_.assign(static_cast<std::size_t>(k) + 1, 0);
    for (CommunityId c : assign_) ++offsets_[c + 1];
    std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
    members_.resize(assign_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (VertexId v = 0; v < assign_.size(); ++v) members_[fill[assign_[v]]++] = v;
}

Partition Partition::singletons(std::size_t n) {
    std::vector<CommunityId> a(n);
    std::iota(a.begin(), a.end(), CommunityId{0});
    return Partition(std::move(a));
}

Partition Partition::whole(std::size_t n) { return Partition(std::vector<CommunityId>(n, 0)); }

Partition Partition::from_labels(std::span<const std::uint64_t> labels) {
    constexpr CommunityId kUnset = std::numeric_limits<CommunityId>::max();
    std::vector<CommunityId> a(labels.size());
    CommunityId next = 0;
    const std::uint64_t max_label = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end());
    if (max_label < 4 * labels.size() + 16) {
        std::vector<CommunityId> remap(max_label + 1, kUnset);
        for (std::size_t v = 0; v < labels.size(); ++v) {
            CommunityId& slot = remap[labels[v]];
            if (slot == kUnset) slot = next++;
            a[v] = slot;
        }
    } else {
        std::unordered_map<std::uint64_t, CommunityId> remap;
        for (std::size_t v = 0; v < labels.size(); ++v) {
            auto [it, inserted] = remap.try_emplace(labels[v], next);
            if (inserted) ++next;
            a[v] = it->second;
        }
    }
    return Partition(std::move(a));
}

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<VertexId>>& blocks) {
    constexpr std::uint64_t kUnset = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> labels(n, kUnset);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (blocks[b].empty()) throw std::invalid_argument("from_blocks: empty block");
        for (VertexId v : blocks[b]) {
            if (v >= n) throw std::invalid_argument("from_blocks: vertex out of range");
            if (labels[v] != kUnset) throw std::invalid_argument("from_blocks: blocks overlap");
            labels[v] = b;
        }
    }
    if (std::find(labels.begin(), labels.end(), kUnset) != labels.end())
        throw std::invalid_argument("from_blocks: blocks do not cover every vertex");
    return from_labels(labels);
}

Partition singleton_partition(const Graph& g) { return Partition::singletons(g.num_vertices()); }

bool refines(const Partition& coarser, const Partition& finer) {
    if (coarser.num_vertices() != finer.num_vertices())
        throw std::invalid_argument("refines: partitions cover different vertex sets");
    constexpr CommunityId kUnset = std::numeric_limits<CommunityId>::max();
    std::vector<CommunityId> host(finer.size(), kUnset);
    for (VertexId v = 0; v < finer.num_vertices(); ++v) {
        CommunityId& h = host[finer.community_of(v)];
        if (h == kUnset)
            h = coarser.community_of(v);
        else if (h != coarser.community_of(v))
            return false;
    }
    return true;
}

Partition refine_connected(const Graph& g, const Partition& p) {
    if (p.num_vertices() != g.num_vertices())
        throw std::invalid_argument("refine_connected: partition does not match graph");
    return components_within(g, p.assignment());
}

bool is_internally_connected(const Graph& g, const Partition& p) {
    return refine_connected(g, p).size() == p.size();
}

}  // namespace resweep
