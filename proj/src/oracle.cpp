#include "resweep/oracle.hpp"

#include <array>
#include <limits>
#include <string>
#include <vector>

#include <omp.h>

#include "resweep/errors.hpp"

namespace resweep {

namespace {

using i128 = __int128;

constexpr std::size_t kMax = kOracleMaxBlocks;
constexpr std::size_t kPrefixLength = 6;

/// Dense quotient weights with integer scoring of Q_t:
/// score = Z t_den sum_B w(B) - t_num sum_B d(B)^2 = Z^2 t_den Q_t.
struct DenseProblem {
    std::size_t k = 0;
    Weight z = 0;
    i128 t_num = 0, t_den = 1;
    std::array<std::array<Weight, kMax>, kMax> m{};
    std::array<Weight, kMax> degree{};

    Rational to_q(i128 score) const {
        const Rational zz = Rational(z) * Rational(z);
        return to_rational(static_cast<u128>(score < 0 ? -score : score)) * (score < 0 ? -1 : 1) /
               (zz * to_rational(static_cast<u128>(t_den)));
    }
};

DenseProblem make_problem(const Graph& q, const ExactRatio& t) {
    if (t.is_zero()) throw std::invalid_argument("resolution t must be positive");
    if (q.num_vertices() > kMax)
        throw SizeLimitError("oracle: " + std::to_string(q.num_vertices()) + " blocks exceed the limit of " +
                             std::to_string(kMax));
    constexpr u128 kLimit = u128{1} << 40;
    if (static_cast<u128>(q.total_weight()) >= kLimit || t.num() >= kLimit || t.den() >= kLimit)
        throw SizeLimitError("oracle: Z or t too large for exact scoring");
    DenseProblem pr;
    pr.k = q.num_vertices();
    pr.z = q.total_weight();
    pr.t_num = static_cast<i128>(t.num());
    pr.t_den = static_cast<i128>(t.den());
    for (VertexId u = 0; u < pr.k; ++u) {
        pr.degree[u] = q.degree(u);
        for (const Neighbor& nb : q.neighbors(u)) pr.m[u][nb.target] = nb.weight;
    }
    return pr;
}

/// Depth-first walk over restricted growth strings with incremental block totals.
class Walker {
public:
    explicit Walker(const DenseProblem& pr) : pr_(pr) {}

    /// Seeds the walk with a fixed prefix (a[0] must be 0).
    void seed(const std::vector<std::uint8_t>& prefix) {
        blocks_ = 0;
        internal_sum_ = 0;
        block_degree_.fill(0);
        for (std::size_t i = 0; i < prefix.size(); ++i) place(i, prefix[i]);
        depth_ = prefix.size();
    }

    template <typename Visit>
    void run(Visit&& visit) {
        descend(depth_, visit);
    }

    i128 score() const {
        i128 sq = 0;
        for (std::size_t b = 0; b < blocks_; ++b) sq += static_cast<i128>(block_degree_[b]) * block_degree_[b];
        return static_cast<i128>(pr_.z) * pr_.t_den * internal_sum_ - pr_.t_num * sq;
    }
    const std::array<std::uint8_t, kMax>& labels() const { return a_; }

    bool stopped = false;

private:
    // returns the internal weight added by putting vertex i into block b
    Weight link(std::size_t i, std::uint8_t b) const {
        Weight w = pr_.m[i][i];
        for (std::size_t v = 0; v < i; ++v)
            if (a_[v] == b) w += 2 * pr_.m[i][v];
        return w;
    }

    void place(std::size_t i, std::uint8_t b) {
        a_[i] = b;
        internal_sum_ += link(i, b);
        block_degree_[b] += pr_.degree[i];
        if (b == blocks_) ++blocks_;
    }


    template <typename Visit>
    void descend(std::size_t i, Visit& visit) {
        if (stopped) return;
        if (i == pr_.k) {
            visit(*this);
            return;
        }
        const std::size_t open = blocks_;
        for (std::size_t b = 0; b <= open && !stopped; ++b) {
            const auto label = static_cast<std::uint8_t>(b);
            const Weight added = link(i, label);
            const bool opened = b == blocks_;
            a_[i] = label;
            internal_sum_ += added;
            block_degree_[b] += pr_.degree[i];
            if (opened) ++blocks_;
            descend(i + 1, visit);
            internal_sum_ -= added;
            block_degree_[b] -= pr_.degree[i];
            if (opened) --blocks_;
        }
    }

    const DenseProblem& pr_;
    std::array<std::uint8_t, kMax> a_{};
    std::array<Weight, kMax> block_degree_{};
    i128 internal_sum_ = 0;
    std::size_t blocks_ = 0;
    std::size_t depth_ = 0;
};

struct Best {
    i128 score = std::numeric_limits<i128>::min();
    std::array<std::uint8_t, kMax> labels{};
    std::uint64_t examined = 0;
};

Best walk(const DenseProblem& pr, const std::vector<std::uint8_t>& prefix) {
    Best best;
    Walker w(pr);
    w.seed(prefix);
    w.run([&](const Walker& at) {
        ++best.examined;
        const i128 s = at.score();
        if (s > best.score) {
            best.score = s;
            best.labels = at.labels();
        }
    });
    return best;
}

void rgs_prefixes(std::size_t len, std::vector<std::uint8_t>& cur, std::uint8_t blocks,
                  std::vector<std::vector<std::uint8_t>>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (std::uint8_t b = 0; b <= blocks; ++b) {
        cur.push_back(b);
        rgs_prefixes(len, cur, b == blocks ? blocks + 1 : blocks, out);
        cur.pop_back();
    }
}

OracleResult finish(const DenseProblem& pr, const Best& best) {
    OracleResult r;
    r.best_q_exact = pr.to_q(best.score);
    r.best_q = r.best_q_exact.convert_to<double>();
    std::vector<std::uint64_t> labels(best.labels.begin(), best.labels.begin() + static_cast<long>(pr.k));
    r.best_partition = Partition::from_labels(labels);
    r.partitions_examined = best.examined;
    return r;
}

}  // namespace

std::uint64_t bell_number(int n) {
    if (n < 0 || n > 25) throw std::invalid_argument("bell_number: n out of range");
    // Bell triangle
    std::vector<std::uint64_t> row{1};
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint64_t> next{row.back()};
        for (std::uint64_t x : row) next.push_back(next.back() + x);
        row = std::move(next);
    }
    return row.front();
}

OracleResult optimal_q_serial(const Graph& g, const ExactRatio& t) {
    const auto pr = make_problem(g, t);
    return finish(pr, walk(pr, {0}));
}

OracleResult optimal_q_parallel(const Graph& g, const ExactRatio& t) {
    const auto pr = make_problem(g, t);
    std::vector<std::vector<std::uint8_t>> prefixes;
    std::vector<std::uint8_t> cur;
    rgs_prefixes(std::min(pr.k, kPrefixLength), cur, 0, prefixes);

    std::vector<Best> partial(prefixes.size());
    const auto count = static_cast<std::int64_t>(prefixes.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) partial[i] = walk(pr, prefixes[i]);

    Best best = partial.front();
    for (std::size_t i = 1; i < partial.size(); ++i) {
        best.examined += partial[i].examined;
        if (partial[i].score > best.score) {
            best.score = partial[i].score;
            best.labels = partial[i].labels;
        }
    }
    return finish(pr, best);
}

OracleResult optimal_q(const Graph& g, const ExactRatio& t) {
    if (g.num_vertices() >= 9 && omp_get_max_threads() > 1) return optimal_q_parallel(g, t);
    return optimal_q_serial(g, t);
}

bool verify_weak_optimality_exhaustive(const Graph& g, const Partition& p, const ExactRatio& t) {
    if (p.size() > kMax)
        throw SizeLimitError("oracle: " + std::to_string(p.size()) + " blocks exceed the limit of " +
                             std::to_string(kMax));
    const Graph q = quotient(g, p);
    const auto pr = make_problem(q, t);
    Walker base(pr);
    std::vector<std::uint8_t> identity(pr.k);
    for (std::size_t i = 0; i < pr.k; ++i) identity[i] = static_cast<std::uint8_t>(i);
    base.seed(identity);
    const i128 reference = base.score();

    bool weakly_optimal = true;
    Walker w(pr);
    w.seed({0});
    w.run([&](Walker& at) {
        if (at.score() > reference) {
            weakly_optimal = false;
            at.stopped = true;
        }
    });
    return weakly_optimal;
}

}  // namespace resweep
