#include <algorithm>
#include <iomanip>
#include <ostream>
#include <stdexcept>

#include "resweep/errors.hpp"
#include "resweep/modularity.hpp"

namespace resweep {

namespace {

double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Folds many (lhs, rhs) instances of one inequality into a single check.
class CheckBuilder {
public:
    CheckBuilder(std::string name, std::string relation) {
        check_.name = std::move(name);
        check_.relation = std::move(relation);
    }

    void add(const Rational& lhs, const Rational& rhs) {
        Rational slack;
        bool ok;
        const std::string& rel = check_.relation;
        if (rel == "<=") {
            slack = rhs - lhs;
            ok = slack >= 0;
        } else if (rel == "<") {
            slack = rhs - lhs;
            ok = slack > 0;
        } else if (rel == ">=") {
            slack = lhs - rhs;
            ok = slack >= 0;
        } else {
            slack = lhs > rhs ? Rational(lhs - rhs) : Rational(rhs - lhs);
            slack = -slack;
            ok = slack == 0;
        }
        if (!seen_ || slack < tightest_) {
            tightest_ = slack;
            check_.lhs = to_double(lhs);
            check_.rhs = to_double(rhs);
            seen_ = true;
        }
        check_.pass = check_.pass && ok;
    }

    BoundCheck done() && {
        if (!seen_) check_.note = "vacuous";
        return std::move(check_);
    }

    static BoundCheck skipped(std::string name, std::string relation, std::string why) {
        BoundCheck c;
        c.name = std::move(name);
        c.relation = std::move(relation);
        c.applicable = false;
        c.note = std::move(why);
        return c;
    }

private:
    BoundCheck check_;
    Rational tightest_;
    bool seen_ = false;
};

}  // namespace

bool BoundsReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return !c.applicable || c.pass; });
}

BoundsReport bounds_report(const Graph& g, const Partition& p, const ExactRatio& t_exact) {
    require_positive(t_exact);
    const auto agg = CommunityAggregates::build(g, p);
    const Rational t = t_exact.to_rational();
    const Rational z = to_rational(static_cast<u128>(agg.total_weight()));
    const std::size_t k = agg.size();
    const bool t_le_one = t <= 1;

    BoundsReport rep;
    rep.t = t_exact.to_double();
    rep.k = k;

    std::vector<Rational> me(k), mv(k), rh(k), mu(k);
    Rational min_rho = 1;
    for (CommunityId c = 0; c < k; ++c) {
        me[c] = Rational(agg.internal(c)) / z;
        mv[c] = Rational(agg.degree(c)) / z;
        rh[c] = Rational(agg.degree(c) - agg.internal(c)) / z;
        mu[c] = me[c] - t * mv[c] * mv[c];
        min_rho = std::min(min_rho, rh[c]);
    }
    const Rational alpha = to_rational(agg.degree_square_sum()) / (z * z);
    const Rational diag = Rational(agg.diagonal_weight()) / z;
    const Rational q = diag - t * alpha;
    const Rational q_bar_direct = (Rational(1) - diag) - t * (Rational(1) - alpha);

    rep.q_t = to_double(q);
    rep.q_bar_t = to_double(q_bar_direct);
    rep.alpha = to_double(alpha);
    rep.upper_fixed_k = to_double(1 - t * alpha);
    rep.upper_fixed_k_count = to_double(1 - t / Rational(k));
    rep.upper_mincut_factor = to_double(diag * (1 - 2 * t * min_rho));
    rep.lower_lowb = to_double(-t / 2 * (1 - diag));
    rep.submodular_floor = to_double(1 - t);

    auto& checks = rep.checks;
    {
        CheckBuilder b("complement_sum", "==");
        b.add(q + q_bar_direct, 1 - t);
        checks.push_back(std::move(b).done());
    }

    // per-community set inequalities
    CheckBuilder mass_identity("mass_identity", "=="), mass_le_one("mass_plus_rho_le_one", "<="),
        mu_identity("mu_identity", "=="), mu_upper_mass("mu_upper_mass", "<="), mu_upper_rho("mu_upper_rho", "<="),
        mu_lower("mu_lower_rho_sq", ">=");
    for (CommunityId c = 0; c < k; ++c) {
        mass_identity.add(mv[c], me[c] + rh[c]);
        mass_le_one.add(me[c] + 2 * rh[c], Rational(1));
        mu_identity.add(mu[c], me[c] * (1 - t * (me[c] + 2 * rh[c])) - t * rh[c] * rh[c]);
        mu_upper_mass.add(mu[c], me[c] * (1 - t * mv[c]));
        mu_upper_rho.add(mu[c], me[c] * (1 - 2 * t * rh[c]));
        if (t_le_one) mu_lower.add(mu[c], -t * rh[c] * rh[c]);
    }
    checks.push_back(std::move(mass_identity).done());
    checks.push_back(std::move(mass_le_one).done());
    checks.push_back(std::move(mu_identity).done());
    checks.push_back(std::move(mu_upper_mass).done());
    checks.push_back(std::move(mu_upper_rho).done());
    checks.push_back(t_le_one ? std::move(mu_lower).done()
                              : CheckBuilder::skipped("mu_lower_rho_sq", ">=", "requires t <= 1"));

    // partition inequalities
    {
        CheckBuilder b("q_upper_fixed_k", "<=");
        b.add(q, 1 - t * alpha);
        checks.push_back(std::move(b).done());
        CheckBuilder b2("fixed_k_count", "<=");
        b2.add(1 - t * alpha, 1 - t / Rational(k));
        checks.push_back(std::move(b2).done());
        CheckBuilder b3("q_upper_min_rho", "<=");
        b3.add(q, diag * (1 - 2 * t * min_rho));
        checks.push_back(std::move(b3).done());
        if (t_le_one) {
            CheckBuilder b4("q_lower_offdiagonal", ">=");
            b4.add(q, -t / 2 * (1 - diag));
            checks.push_back(std::move(b4).done());
        } else {
            checks.push_back(CheckBuilder::skipped("q_lower_offdiagonal", ">=", "requires t <= 1"));
        }
    }

    const auto sub = is_submodular(agg, t_exact);
    rep.submodular = sub.submodular;
    rep.witness = sub.witness;
    {
        BoundCheck c;
        c.name = "submodular";
        c.relation = "<=";
        if (sub.witness) {
            c.lhs = to_double(mu_t(agg, sub.witness->first, sub.witness->second, t_exact));
            c.note = "pair " + std::to_string(sub.witness->first) + "," + std::to_string(sub.witness->second);
        }
        c.pass = sub.submodular;
        checks.push_back(std::move(c));
    }

    if (!sub.submodular) {
        for (const char* name : {"positive", "submodular_floor", "pair_mass_square", "mass_square", "count_square",
                                 "mass_range_lower", "mass_range_upper", "count_bound"})
            checks.push_back(CheckBuilder::skipped(name, "", "partition is not submodular"));
        return rep;
    }

    if (t_le_one) {
        CheckBuilder b("positive", ">=");
        for (CommunityId c = 0; c < k; ++c) b.add(mu[c], Rational(0));
        checks.push_back(std::move(b).done());
    } else {
        checks.push_back(CheckBuilder::skipped("positive", ">=", "requires t <= 1"));
    }
    {
        CheckBuilder b("submodular_floor", ">=");
        b.add(q, 1 - t);
        checks.push_back(std::move(b).done());
    }

    if (k < 2) {
        for (const char* name : {"pair_mass_square", "mass_square", "count_square", "mass_range_lower",
                                 "mass_range_upper", "count_bound"})
            checks.push_back(CheckBuilder::skipped(name, "", "requires at least two communities"));
        return rep;
    }

    {
        CheckBuilder b("pair_mass_square", ">=");
        for (const auto& pw : agg.adjacent_pairs()) {
            const Rational joint = mv[pw.first] + mv[pw.second];
            b.add(joint * joint, 4 * (Rational(pw.weight) / z) / t);
        }
        checks.push_back(std::move(b).done());
    }

    Weight cut = 0;
    try {
        cut = min_cut(g);
    } catch (const DisconnectedError&) {
        rep.min_cut_note = "graph is disconnected";
    } catch (const std::invalid_argument& e) {
        rep.min_cut_note = e.what();
    }
    if (!rep.min_cut_note.empty()) {
        for (const char* name : {"mass_square", "count_square", "mass_range_lower", "mass_range_upper", "count_bound"})
            checks.push_back(CheckBuilder::skipped(name, "", rep.min_cut_note));
        return rep;
    }
    rep.min_cut = cut;
    const Rational scale = Rational(cut) / (t * z);  // c*/(tZ)
    rep.k_bound = to_double(1 / scale);

    CheckBuilder mass_square("mass_square", "<="), mass_low("mass_range_lower", "<"), mass_high("mass_range_upper", "<");
    const Rational quarter(1, 4), half(1, 2);
    for (CommunityId c = 0; c < k; ++c) {
        const Rational dev = mv[c] - half;
        mass_square.add(dev * dev, quarter - scale);
        mass_low.add(scale, mv[c]);
        mass_high.add(mv[c], 1 - scale);
        rep.scaling.push_back({c, to_double(mv[c]), to_double(scale), to_double(1 - scale),
                               scale < mv[c] && mv[c] < 1 - scale});
    }
    checks.push_back(std::move(mass_square).done());
    {
        CheckBuilder b("count_square", "<=");
        const Rational dev = Rational(1, static_cast<long long>(k)) - half;
        b.add(dev * dev, quarter - scale);
        checks.push_back(std::move(b).done());
    }
    checks.push_back(std::move(mass_low).done());
    checks.push_back(std::move(mass_high).done());
    {
        CheckBuilder b("count_bound", "<");
        b.add(Rational(static_cast<long long>(k)), 1 / scale);
        checks.push_back(std::move(b).done());
    }
    return rep;
}

void write_bounds_report(std::ostream& out, const BoundsReport& r) {
    const auto flags = out.flags();
    const auto prec = out.precision();
    out << std::setprecision(12);
    out << "t " << r.t << '\n'
        << "communities " << r.k << '\n'
        << "q_t " << r.q_t << '\n'
        << "q_bar_t " << r.q_bar_t << '\n'
        << "alpha " << r.alpha << '\n'
        << "upper_fixed_k " << r.upper_fixed_k << '\n'
        << "upper_fixed_k_count " << r.upper_fixed_k_count << '\n'
        << "upper_mincut_factor " << r.upper_mincut_factor << '\n'
        << "lower_lowb " << r.lower_lowb << '\n'
        << "submodular_floor " << r.submodular_floor << '\n'
        << "submodular " << (r.submodular ? "yes" : "no") << '\n';
    if (r.witness) out << "witness " << r.witness->first << ' ' << r.witness->second << '\n';
    if (r.min_cut) {
        out << "min_cut " << *r.min_cut << '\n';
        out << "k_bound " << *r.k_bound << '\n';
    } else if (!r.min_cut_note.empty()) {
        out << "min_cut n/a (" << r.min_cut_note << ")\n";
    }
    for (const auto& c : r.checks) {
        out << "check " << c.name << ' ' << (c.relation.empty() ? "-" : c.relation) << ' ';
        if (c.applicable)
            out << c.lhs << ' ' << c.rhs << ' ' << (c.pass ? "PASS" : "FAIL");
        else
            out << "- - SKIP";
        if (!c.note.empty()) out << " # " << c.note;
        out << '\n';
    }
    for (const auto& s : r.scaling)
        out << "scaling " << s.community << ' ' << s.mass << ' ' << s.lower << ' ' << s.upper << ' '
            << (s.pass ? "PASS" : "FAIL") << '\n';
    out << "result " << (r.all_pass() ? "PASS" : "FAIL") << '\n';
    out.flags(flags);
    out.precision(prec);
}

}  // namespace resweep
