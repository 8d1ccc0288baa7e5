#include "resweep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "resweep/errors.hpp"
#include "resweep/partition.hpp"
#include "detail.hpp"

namespace resweep {

Weight Graph::weight(VertexId u, VertexId v) const {
    auto row = neighbors(u);
    auto it = std::lower_bound(row.begin(), row.end(), v,
                               [](const Neighbor& nb, VertexId t) { return nb.target < t; });
    return (it != row.end() && it->target == v) ? it->weight : 0;
}

void GraphBuilder::add_edge(VertexId u, VertexId v, Weight w) {
    if (u >= n_ || v >= n_) throw std::out_of_range("GraphBuilder: vertex out of range");
    if (w <= 0) throw std::invalid_argument("GraphBuilder: weights must be positive");
    if (u == v) {
        entries_.push_back({u, u, 2 * w});
        return;
    }
    entries_.push_back({u, v, w});
    entries_.push_back({v, u, w});
}

void GraphBuilder::add_diagonal(VertexId v, Weight diagonal) {
    if (v >= n_) throw std::out_of_range("GraphBuilder: vertex out of range");
    if (diagonal <= 0) throw std::invalid_argument("GraphBuilder: weights must be positive");
    entries_.push_back({v, v, diagonal});
}

Graph GraphBuilder::build() && {
    // bucket by row, then sort each row by target
    {
        std::vector<std::size_t> start(n_ + 1, 0);
        for (const Entry& e : entries_) ++start[e.u + 1];
        std::partial_sum(start.begin(), start.end(), start.begin());
        std::vector<Entry> bucketed(entries_.size());
        std::vector<std::size_t> fill(start.begin(), start.end() - 1);
        for (const Entry& e : entries_) bucketed[fill[e.u]++] = e;
        for (std::size_t u = 0; u < n_; ++u)
            std::sort(bucketed.begin() + static_cast<std::ptrdiff_t>(start[u]),
                      bucketed.begin() + static_cast<std::ptrdiff_t>(start[u + 1]),
                      [](const Entry& a, const Entry& b) { return a.v < b.v; });
        entries_ = std::move(bucketed);
    }
    Graph g;
    g.degree_.assign(n_, 0);
    g.offsets_.assign(n_ + 1, 0);
    g.adjacency_.reserve(entries_.size());
    const Entry* prev = nullptr;
    for (const Entry& e : entries_) {
        if (prev != nullptr && prev->u == e.u && prev->v == e.v) {
            g.adjacency_.back().weight += e.w;
        } else {
            g.adjacency_.push_back({e.v, e.w});
            ++g.offsets_[e.u + 1];
            if (e.u < e.v) ++g.num_edges_;
        }
        g.degree_[e.u] += e.w;
        prev = &e;
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    entries_.clear();
    entries_.shrink_to_fit();
    for (std::size_t v = 0; v < n_; ++v) {
        if (g.degree_[v] <= 0)
            throw IsolatedVertexError("vertex " + std::to_string(v) + " has zero total weight");
    }
    g.total_ = std::accumulate(g.degree_.begin(), g.degree_.end(), Weight{0});
    return g;
}

LabeledGraph LabeledGraph::with_index_labels(Graph g) {
    LabeledGraph out;
    out.graph = std::move(g);
    const std::size_t n = out.graph.num_vertices();
    out.labels.reserve(n);
    out.index.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        out.labels.push_back(std::to_string(v));
        out.index.emplace(out.labels.back(), static_cast<VertexId>(v));
    }
    return out;
}

Graph quotient(const Graph& g, const Partition& p) {
    if (p.num_vertices() != g.num_vertices())
        throw std::invalid_argument("quotient: partition does not match graph");
    GraphBuilder b(p.size());
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const CommunityId cu = p.community_of(u);
        for (const Neighbor& nb : g.neighbors(u)) {
            const CommunityId cv = p.community_of(nb.target);
            if (cu == cv)
                b.add_diagonal(cu, nb.weight);
            else if (cu < cv)
                b.add_edge(cu, cv, nb.weight);
        }
    }
    return std::move(b).build();
}

namespace {

struct DisjointSets {
    std::vector<VertexId> parent;
    explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), VertexId{0}); }
    VertexId find(VertexId x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        parent[b] = a;
    }
};

}  // namespace

Partition components_within(const Graph& g, std::span<const CommunityId> assign) {
    DisjointSets ds(g.num_vertices());
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        for (const Neighbor& nb : g.neighbors(u)) {
            if (nb.target > u && (assign.empty() || assign[u] == assign[nb.target])) ds.unite(u, nb.target);
        }
    }
    std::vector<std::uint64_t> roots(g.num_vertices());
    for (VertexId v = 0; v < g.num_vertices(); ++v) roots[v] = ds.find(v);
    return Partition::from_labels(roots);
}

Partition connected_components(const Graph& g) { return components_within(g, {}); }

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

}  // namespace resweep
