#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "resweep/exact.hpp"
#include "resweep/graph.hpp"
#include "resweep/measures.hpp"
#include "resweep/partition.hpp"

namespace resweep {

/// Q_t = sum_C [w(C)/Z - t (d(C)/Z)^2]; Newman modularity at t = 1.
double q_t(const Graph& g, const Partition& p, double t);
double q_t(const CommunityAggregates& agg, double t);
Rational q_t_exact(const Graph& g, const Partition& p, const ExactRatio& t);
Rational q_t_exact(const CommunityAggregates& agg, const ExactRatio& t);

/// Off-diagonal mass, (1 - t) - Q_t.
double q_bar_t(const Graph& g, const Partition& p, double t);
Rational q_bar_t_exact(const CommunityAggregates& agg, const ExactRatio& t);

/// alpha = m_VV(D) = sum_C m_V(C)^2.
ExactRatio diagonal_product_mass(const CommunityAggregates& agg);

/// Resolution t(C): max over distinct pairs of m_E/m_VV, 0 for a single block
/// or when no two blocks share an edge.
ExactRatio partition_resolution(const CommunityAggregates& agg);

struct SubmodularityCheck {
    bool submodular = true;
    /// First violating pair (lexicographic) when not submodular.
    std::optional<std::pair<CommunityId, CommunityId>> witness;
};

/// mu_t(C x C') <= 0 for all distinct pairs, decided exactly. Equivalent to
/// weak optimality of p for Q_t.
SubmodularityCheck is_submodular(const Graph& g, const Partition& p, const ExactRatio& t);
SubmodularityCheck is_submodular(const CommunityAggregates& agg, const ExactRatio& t);

/// Exact change of Q_t when C and C' are merged: 2 mu_t(C x C').
Rational merge_delta_exact(const CommunityAggregates& agg, CommunityId c, CommunityId c2, const ExactRatio& t);
double merge_delta(const CommunityAggregates& agg, CommunityId c, CommunityId c2, double t);

/// One inequality (or identity) of the bounds report, evaluated exactly.
/// For per-community and per-pair checks, lhs/rhs are taken at the tightest
/// member and `pass` covers all of them.
struct BoundCheck {
    std::string name;
    std::string relation;  // "<=", "<", ">=", "=="
    double lhs = 0;
    double rhs = 0;
    bool applicable = true;
    bool pass = true;
    std::string note;
};

struct ScalingCheck {
    CommunityId community;
    double mass;   // m_V(C)
    double lower;  // c*/(tZ)
    double upper;  // 1 - c*/(tZ)
    bool pass;
};

struct BoundsReport {
    double t = 0;
    std::size_t k = 0;
    double q_t = 0;
    double q_bar_t = 0;
    double alpha = 0;
    double upper_fixed_k = 0;        // 1 - t sum m_V^2
    double upper_fixed_k_count = 0;  // 1 - t/k
    double upper_mincut_factor = 0;  // m_E(D)(1 - 2t min rho)
    double lower_lowb = 0;           // (-t/2)(1 - m_E(D))
    double submodular_floor = 0;     // 1 - t
    bool submodular = false;
    std::optional<std::pair<CommunityId, CommunityId>> witness;
    std::optional<Weight> min_cut;
    std::string min_cut_note;
    std::optional<double> k_bound;  // tZ/c*
    std::vector<ScalingCheck> scaling;
    std::vector<BoundCheck> checks;

    bool all_pass() const;
};

/// Evaluates every set/partition inequality, the submodular floor and the
/// community-size bounds. The c*-dependent entries are skipped, with a note,
/// when g is disconnected.
BoundsReport bounds_report(const Graph& g, const Partition& p, const ExactRatio& t);

void write_bounds_report(std::ostream& out, const BoundsReport& report);

}  // namespace resweep
