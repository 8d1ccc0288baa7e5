#include "resweep/kernels.hpp"

#include <omp.h>

namespace resweep::kernels {

CommunityTotals community_totals_serial(const Graph& g, std::span<const CommunityId> assign, std::size_t k) {
    CommunityTotals out{std::vector<Weight>(k, 0), std::vector<Weight>(k, 0)};
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const CommunityId c = assign[u];
        out.degree[c] += g.degree(u);
        for (const Neighbor& nb : g.neighbors(u))
            if (assign[nb.target] == c) out.internal[c] += nb.weight;
    }
    return out;
}

CommunityTotals community_totals_parallel(const Graph& g, std::span<const CommunityId> assign, std::size_t k) {
    CommunityTotals out{std::vector<Weight>(k, 0), std::vector<Weight>(k, 0)};
    Weight* degree = out.degree.data();
    Weight* internal = out.internal.data();
    const auto n = static_cast<std::int64_t>(g.num_vertices());
#pragma omp parallel for schedule(static) reduction(+ : degree[:k], internal[:k])
    for (std::int64_t i = 0; i < n; ++i) {
        const auto u = static_cast<VertexId>(i);
        const CommunityId c = assign[u];
        degree[c] += g.degree(u);
        Weight inside = 0;
        for (const Neighbor& nb : g.neighbors(u))
            if (assign[nb.target] == c) inside += nb.weight;
        internal[c] += inside;
    }
    return out;
}

CommunityTotals community_totals(const Graph& g, const Partition& p) {
    if (g.num_vertices() >= kParallelVertexThreshold && omp_get_max_threads() > 1)
        return community_totals_parallel(g, p.assignment(), p.size());
    return community_totals_serial(g, p.assignment(), p.size());
}

}  // namespace resweep::kernels
