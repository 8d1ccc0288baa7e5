#pragma once

#include <span>
#include <utility>
#include <vector>

#include "resweep/exact.hpp"
#include "resweep/graph.hpp"
#include "resweep/partition.hpp"

namespace resweep {

/// Integer aggregates of a graph over the rectangles C x C' of a partition.
///
/// Stores d(C), the internal weight w(C) = Z*m_E(C x C) and, sparsely, the
/// cross weight w(C,C') = Z*m_E(C x C') of every adjacent pair. Pairs that
/// share no edge have w(C,C') = 0.
class CommunityAggregates {
public:
    struct PairWeight {
        CommunityId first;  // first < second
        CommunityId second;
        Weight weight;
    };

    static CommunityAggregates build(const Graph& g, const Partition& p);

    Weight total_weight() const noexcept { return total_; }
    std::size_t size() const noexcept { return degree_.size(); }
    Weight degree(CommunityId c) const { return degree_.at(c); }
    Weight internal(CommunityId c) const { return internal_.at(c); }
    /// w(C,C'); equals internal(C) when c == c2.
    Weight between(CommunityId c, CommunityId c2) const;
    /// Adjacent pairs sorted by (first, second).
    std::span<const PairWeight> adjacent_pairs() const noexcept { return pairs_; }

    /// sum_C w(C), i.e. Z*m_E(D(partition)).
    Weight diagonal_weight() const noexcept { return diagonal_; }
    /// sum_C d(C)^2, i.e. Z^2*alpha.
    u128 degree_square_sum() const noexcept { return degree_sq_; }

private:
    Weight total_ = 0;
    Weight diagonal_ = 0;
    u128 degree_sq_ = 0;
    std::vector<Weight> degree_;
    std::vector<Weight> internal_;
    std::vector<PairWeight> pairs_;
};

/// m_E(C x C').
ExactRatio edge_measure(const CommunityAggregates& agg, CommunityId c, CommunityId c2);
/// m_VV(C x C') = m_V(C) m_V(C').
ExactRatio product_measure(const CommunityAggregates& agg, CommunityId c, CommunityId c2);
/// m_V(C).
ExactRatio vertex_measure(const CommunityAggregates& agg, CommunityId c);
/// rho(C) = m_E(C x (V \ C)).
ExactRatio rho(const CommunityAggregates& agg, CommunityId c);

/// mu_t(C x C') = m_E(C x C') - t m_VV(C x C'). Throws std::invalid_argument for t <= 0.
Rational mu_t(const CommunityAggregates& agg, CommunityId c, CommunityId c2, const ExactRatio& t);
double mu_t(const CommunityAggregates& agg, CommunityId c, CommunityId c2, double t);

/// m_E(C x C') / m_VV(C x C') for C != C': the smallest t making the pair submodular.
ExactRatio pair_resolution(const CommunityAggregates& agg, CommunityId c, CommunityId c2);

void require_positive(const ExactRatio& t);
void require_positive(double t);

}  // namespace resweep
