#include "resweep/modularity.hpp"

#include <stdexcept>

#include "resweep/kernels.hpp"

namespace resweep {

namespace {

long double q_from_totals(long double diagonal, long double degree_sq, long double z, long double t) {
    return diagonal / z - t * (degree_sq / (z * z));
}

}  // namespace

double q_t(const Graph& g, const Partition& p, double t) {
    require_positive(t);
    if (p.num_vertices() != g.num_vertices()) throw std::invalid_argument("q_t: partition does not match graph");
    const auto totals = kernels::community_totals(g, p);
    long double diagonal = 0, degree_sq = 0;
    for (std::size_t c = 0; c < totals.degree.size(); ++c) {
        diagonal += static_cast<long double>(totals.internal[c]);
        const auto d = static_cast<long double>(totals.degree[c]);
        degree_sq += d * d;
    }
    return static_cast<double>(q_from_totals(diagonal, degree_sq, static_cast<long double>(g.total_weight()), t));
}

double q_t(const CommunityAggregates& agg, double t) {
    require_positive(t);
    return static_cast<double>(q_from_totals(static_cast<long double>(agg.diagonal_weight()),
                                             static_cast<long double>(agg.degree_square_sum()),
                                             static_cast<long double>(agg.total_weight()), t));
}

Rational q_t_exact(const CommunityAggregates& agg, const ExactRatio& t) {
    require_positive(t);
    const Rational z = to_rational(static_cast<u128>(agg.total_weight()));
    return Rational(agg.diagonal_weight()) / z - t.to_rational() * to_rational(agg.degree_square_sum()) / (z * z);
}

Rational q_t_exact(const Graph& g, const Partition& p, const ExactRatio& t) {
    return q_t_exact(CommunityAggregates::build(g, p), t);
}

double q_bar_t(const Graph& g, const Partition& p, double t) { return (1.0 - t) - q_t(g, p, t); }

Rational q_bar_t_exact(const CommunityAggregates& agg, const ExactRatio& t) {
    return (Rational(1) - t.to_rational()) - q_t_exact(agg, t);
}

ExactRatio diagonal_product_mass(const CommunityAggregates& agg) {
    const auto z = static_cast<u128>(agg.total_weight());
    return ExactRatio(agg.degree_square_sum(), z * z);
}

ExactRatio partition_resolution(const CommunityAggregates& agg) {
    ExactRatio best;
    for (const auto& pw : agg.adjacent_pairs()) {
        ExactRatio r = pair_resolution(agg, pw.first, pw.second);
        if (r > best) best = r;
    }
    return best;
}

SubmodularityCheck is_submodular(const CommunityAggregates& agg, const ExactRatio& t) {
    require_positive(t);
    // non-adjacent pairs have mu_t = -t m_VV < 0
    for (const auto& pw : agg.adjacent_pairs()) {
        if (pair_resolution(agg, pw.first, pw.second) > t)
            return {false, std::pair{pw.first, pw.second}};
    }
    return {};
}

SubmodularityCheck is_submodular(const Graph& g, const Partition& p, const ExactRatio& t) {
    return is_submodular(CommunityAggregates::build(g, p), t);
}

Rational merge_delta_exact(const CommunityAggregates& agg, CommunityId c, CommunityId c2, const ExactRatio& t) {
    if (c == c2) throw std::invalid_argument("merge_delta: communities must differ");
    return 2 * mu_t(agg, c, c2, t);
}

double merge_delta(const CommunityAggregates& agg, CommunityId c, CommunityId c2, double t) {
    if (c == c2) throw std::invalid_argument("merge_delta: communities must differ");
    return 2.0 * mu_t(agg, c, c2, t);
}

}  // namespace resweep
