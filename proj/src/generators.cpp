#include "resweep/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "resweep/measures.hpp"
#include "resweep/modularity.hpp"

namespace resweep {

Graph gen_daisy(int r) {
    if (r < 1) throw std::invalid_argument("gen_daisy: r must be at least 1");
    const std::size_t petals = 25 * static_cast<std::size_t>(r);
    GraphBuilder b(1 + 3 * petals);
    for (std::size_t i = 0; i < petals; ++i) {
        const auto hub = static_cast<VertexId>(1 + 3 * i);
        b.add_edge(0, hub, 1);
        b.add_edge(hub, hub + 1, 1);
        b.add_edge(hub, hub + 2, 1);
    }
    return std::move(b).build();
}

double daisy_reference_q1(int r) {
    if (r < 1) throw std::invalid_argument("daisy_reference_q1: r must be at least 1");
    return 4.0 / 25.0 * (4.0 - 1.0 / (6.0 * r));
}

std::int64_t daisy_submodular_threshold(int r, const ExactRatio& t) {
    if (r < 1) throw std::invalid_argument("daisy_submodular_threshold: r must be at least 1");
    if (t.is_zero() || t > ExactRatio(6, 5))
        throw std::invalid_argument("daisy_submodular_threshold: t must lie in (0, 6/5]");
    // r(6/t - 5) = r(6 den - 5 num)/num >= 0 since t <= 6/5
    const u128 num = t.num(), den = t.den();
    const u128 top = static_cast<u128>(r) * (6 * den - 5 * num);
    const u128 n = (top + num - 1) / num;
    const u128 cap = 25 * static_cast<u128>(r);
    return static_cast<std::int64_t>(n < cap ? n : cap);
}

Graph gen_complete_binary_tree(int height) {
    if (height < 1) throw std::invalid_argument("gen_complete_binary_tree: height must be at least 1");
    if (height > 30) throw std::invalid_argument("gen_complete_binary_tree: height too large");
    const std::size_t n = (std::size_t{1} << (height + 1)) - 1;
    GraphBuilder b(n);
    for (std::size_t v = 1; v < n; ++v) b.add_edge(static_cast<VertexId>((v - 1) / 2), static_cast<VertexId>(v), 1);
    return std::move(b).build();
}

TreeBound tree_bound(std::int64_t z) {
    if (z < 2 || z % 2 != 0) throw std::invalid_argument("tree_bound: Z must be even and at least 2");
    // s* = floor((1 + sqrt(1 + 2Z)) / 2) = floor((1 + isqrt(1 + 2Z)) / 2)
    const auto radicand = static_cast<std::uint64_t>(1 + 2 * z);
    auto root = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(radicand)));
    while (root * root > radicand) --root;
    while ((root + 1) * (root + 1) <= radicand) ++root;
    TreeBound tb;
    tb.z = z;
    tb.s_star = static_cast<std::int64_t>((1 + root) / 2);
    const double s = static_cast<double>(tb.s_star);
    tb.bound = 1.0 - (2.0 * (s - 1.0) / static_cast<double>(z) + 1.0 / s);
    return tb;
}

Partition tree_reference_partition(int height) {
    if (height < 3) throw std::invalid_argument("tree_reference_partition: height must be at least 3");
    if (height > 30) throw std::invalid_argument("tree_reference_partition: height too large");
    const int h = (height - 1) / 2;  // ceil((height - 2) / 2)
    const std::size_t n = (std::size_t{1} << (height + 1)) - 1;
    const std::size_t root_size = (std::size_t{1} << (h + 1)) - 1;
    const std::size_t first_hanging = root_size;  // vertices at depth h+1 start here
    const std::size_t last_hanging = (std::size_t{1} << (h + 2)) - 2;
    std::vector<std::uint64_t> labels(n);
    for (std::size_t v = 0; v < n; ++v) {
        if (v < root_size) {
            labels[v] = 0;
            continue;
        }
        std::size_t a = v;
        while (a > last_hanging) a = (a - 1) / 2;
        labels[v] = 1 + (a - first_hanging);
    }
    return Partition::from_labels(labels);
}

std::pair<double, double> tree_q1_identity_check(const Graph& tree, const Partition& p) {
    if (tree.num_edges() + 1 != tree.num_vertices() || !is_connected(tree))
        throw std::invalid_argument("tree_q1_identity_check: graph is not a tree");
    for (VertexId v = 0; v < tree.num_vertices(); ++v)
        for (const Neighbor& nb : tree.neighbors(v))
            if (nb.target == v || nb.weight != 1)
                throw std::invalid_argument("tree_q1_identity_check: graph is not an unweighted simple tree");
    if (!is_internally_connected(tree, p))
        throw std::invalid_argument("tree_q1_identity_check: partition is not internally connected");

    const auto agg = CommunityAggregates::build(tree, p);
    const double k = static_cast<double>(p.size());
    const double z = static_cast<double>(tree.total_weight());
    double spread = 0;
    for (CommunityId c = 0; c < agg.size(); ++c) {
        const double dev = static_cast<double>(agg.degree(c)) / z - 1.0 / k;
        spread += dev * dev;
    }
    const double rhs = 1.0 - 2.0 * (k - 1.0) / z - 1.0 / k - spread;
    return {q_t(tree, p, 1.0), rhs};
}

}  // namespace resweep
