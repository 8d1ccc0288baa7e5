#include "resweep/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "resweep/kernels.hpp"

namespace resweep {

CommunityAggregates CommunityAggregates::build(const Graph& g, const Partition& p) {
    if (p.num_vertices() != g.num_vertices())
        throw std::invalid_argument("CommunityAggregates: partition does not match graph");
    CommunityAggregates agg;
    agg.total_ = g.total_weight();
    auto totals = kernels::community_totals(g, p);
    agg.degree_ = std::move(totals.degree);
    agg.internal_ = std::move(totals.internal);
    for (std::size_t c = 0; c < agg.size(); ++c) {
        agg.diagonal_ += agg.internal_[c];
        agg.degree_sq_ += static_cast<u128>(agg.degree_[c]) * static_cast<u128>(agg.degree_[c]);
    }

    std::unordered_map<std::uint64_t, Weight> cross;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const CommunityId cu = p.community_of(u);
        for (const Neighbor& nb : g.neighbors(u)) {
            const CommunityId cv = p.community_of(nb.target);
            if (cu < cv) cross[(static_cast<std::uint64_t>(cu) << 32) | cv] += nb.weight;
        }
    }
    agg.pairs_.reserve(cross.size());
    for (auto [key, w] : cross)
        agg.pairs_.push_back({static_cast<CommunityId>(key >> 32), static_cast<CommunityId>(key), w});
    std::sort(agg.pairs_.begin(), agg.pairs_.end(), [](const PairWeight& a, const PairWeight& b) {
        return a.first != b.first ? a.first < b.first : a.second < b.second;
    });
    return agg;
}

Weight CommunityAggregates::between(CommunityId c, CommunityId c2) const {
    if (c >= size() || c2 >= size()) throw std::out_of_range("unknown community id");
    if (c == c2) return internal_[c];
    if (c > c2) std::swap(c, c2);
    auto it = std::lower_bound(pairs_.begin(), pairs_.end(), std::pair{c, c2},
                               [](const PairWeight& pw, const std::pair<CommunityId, CommunityId>& key) {
                                   return pw.first != key.first ? pw.first < key.first : pw.second < key.second;
                               });
    return (it != pairs_.end() && it->first == c && it->second == c2) ? it->weight : 0;
}

namespace {

u128 as_u128(Weight w) { return static_cast<u128>(w); }

}  // namespace

void require_positive(const ExactRatio& t) {
    if (t.is_zero()) throw std::invalid_argument("resolution t must be positive");
}

void require_positive(double t) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw std::invalid_argument("resolution t must be positive, got " + std::to_string(t));
}

ExactRatio edge_measure(const CommunityAggregates& agg, CommunityId c, CommunityId c2) {
    return ExactRatio(as_u128(agg.between(c, c2)), as_u128(agg.total_weight()));
}

ExactRatio product_measure(const CommunityAggregates& agg, CommunityId c, CommunityId c2) {
    const u128 z = as_u128(agg.total_weight());
    return ExactRatio(as_u128(agg.degree(c)) * as_u128(agg.degree(c2)), z * z);
}

ExactRatio vertex_measure(const CommunityAggregates& agg, CommunityId c) {
    return ExactRatio(as_u128(agg.degree(c)), as_u128(agg.total_weight()));
}

ExactRatio rho(const CommunityAggregates& agg, CommunityId c) {
    return ExactRatio(as_u128(agg.degree(c) - agg.internal(c)), as_u128(agg.total_weight()));
}

Rational mu_t(const CommunityAggregates& agg, CommunityId c, CommunityId c2, const ExactRatio& t) {
    require_positive(t);
    return edge_measure(agg, c, c2).to_rational() - t.to_rational() * product_measure(agg, c, c2).to_rational();
}

double mu_t(const CommunityAggregates& agg, CommunityId c, CommunityId c2, double t) {
    require_positive(t);
    const long double z = static_cast<long double>(agg.total_weight());
    const long double me = static_cast<long double>(agg.between(c, c2)) / z;
    const long double mvv = static_cast<long double>(agg.degree(c)) / z * (static_cast<long double>(agg.degree(c2)) / z);
    return static_cast<double>(me - static_cast<long double>(t) * mvv);
}

ExactRatio pair_resolution(const CommunityAggregates& agg, CommunityId c, CommunityId c2) {
    if (c == c2) throw std::invalid_argument("pair_resolution: communities must differ");
    return ExactRatio(as_u128(agg.total_weight()) * as_u128(agg.between(c, c2)),
                      as_u128(agg.degree(c)) * as_u128(agg.degree(c2)));
}

}  // namespace resweep
