#include "test_support.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace resweep::testing {

LabeledGraph graph_from_text(const std::string& text) {
    std::istringstream in(text);
    return load_edge_list(in);
}

LabeledGraph triangle() { return graph_from_text("a b\nb c\nc a\n"); }

LabeledGraph barbell() { return graph_from_text("a b\nb c\nc a\nd e\ne f\nf d\nc d\n"); }

LabeledGraph two_triangles() { return graph_from_text("a b\nb c\nc a\nd e\ne f\nf d\n"); }

std::string fixture_path(const std::string& name) { return std::string(RESWEEP_FIXTURES) + "/" + name; }

LabeledGraph karate() { return load_edge_list_file(fixture_path("karate.edges")); }

Partition blocks_of(const LabeledGraph& g, const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::vector<VertexId>> ids;
    for (const auto& b : blocks) {
        ids.emplace_back();
        for (const auto& label : b) ids.back().push_back(g.index.at(label));
    }
    return Partition::from_blocks(g.graph.num_vertices(), ids);
}

Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double density, Weight max_weight, bool loops) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<Weight> weight(1, max_weight);
    GraphBuilder b(n);
    std::vector<VertexId> order(n);
    std::iota(order.begin(), order.end(), VertexId{0});
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 1; i < n; ++i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        b.add_edge(order[i], order[pick(rng)], weight(rng));
    }
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng) < density) b.add_edge(u, v, weight(rng));
        if (loops && coin(rng) < 0.2) b.add_edge(u, u, weight(rng));
    }
    if (n == 1) b.add_edge(0, 0, 1);
    return std::move(b).build();
}

Graph random_graph(std::mt19937_64& rng, std::size_t n, double density, Weight max_weight) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<Weight> weight(1, max_weight);
    GraphBuilder b(n);
    std::vector<int> touched(n, 0);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (coin(rng) < density) {
                b.add_edge(u, v, weight(rng));
                touched[u] = touched[v] = 1;
            }
    for (VertexId u = 0; u < n; ++u)
        if (!touched[u]) b.add_edge(u, u, 1);
    return std::move(b).build();
}

Partition random_partition(std::mt19937_64& rng, std::size_t n, std::size_t max_blocks) {
    std::uniform_int_distribution<std::uint64_t> pick(0, std::max<std::size_t>(max_blocks, 1) - 1);
    std::vector<std::uint64_t> labels(n);
    for (auto& l : labels) l = pick(rng);
    return Partition::from_labels(labels);
}

namespace {

Rational dense_sum(const Graph& g, const Partition& p, const Rational& t, bool same) {
    const Rational z = g.total_weight();
    Rational acc = 0;
    for (VertexId u = 0; u < g.num_vertices(); ++u)
        for (VertexId v = 0; v < g.num_vertices(); ++v) {
            if ((p.community_of(u) == p.community_of(v)) != same) continue;
            acc += Rational(g.weight(u, v)) / z - t * Rational(g.degree(u)) * Rational(g.degree(v)) / (z * z);
        }
    return acc;
}

}  // namespace

Rational dense_q(const Graph& g, const Partition& p, const Rational& t) { return dense_sum(g, p, t, true); }

Rational dense_q_bar(const Graph& g, const Partition& p, const Rational& t) { return dense_sum(g, p, t, false); }

Rational dense_mu(const Graph& g, const std::vector<VertexId>& a, const std::vector<VertexId>& b, const Rational& t) {
    const Rational z = g.total_weight();
    Rational acc = 0;
    for (VertexId u : a)
        for (VertexId v : b)
            acc += Rational(g.weight(u, v)) / z - t * Rational(g.degree(u)) * Rational(g.degree(v)) / (z * z);
    return acc;
}

Weight brute_min_cut(const Graph& g) {
    const std::size_t n = g.num_vertices();
    if (n < 2 || n > 24) throw std::invalid_argument("brute_min_cut: n out of range");
    Weight best = std::numeric_limits<Weight>::max();
    // vertex n-1 always on the outside
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (n - 1)); ++mask) {
        Weight cut = 0;
        for (VertexId u = 0; u < n; ++u) {
            if (!((mask >> u) & 1)) continue;
            for (const Neighbor& nb : g.neighbors(u))
                if (nb.target != u && !((mask >> nb.target) & 1)) cut += nb.weight;
        }
        best = std::min(best, cut);
    }
    return best;
}

std::vector<Partition> all_partitions(std::size_t n) {
    std::vector<std::vector<std::vector<VertexId>>> current{{}};
    for (VertexId v = 0; v < n; ++v) {
        std::vector<std::vector<std::vector<VertexId>>> next;
        for (const auto& blocks : current) {
            for (std::size_t i = 0; i < blocks.size(); ++i) {
                auto copy = blocks;
                copy[i].push_back(v);
                next.push_back(std::move(copy));
            }
            auto copy = blocks;
            copy.push_back({v});
            next.push_back(std::move(copy));
        }
        current = std::move(next);
    }
    std::vector<Partition> out;
    for (const auto& blocks : current) out.push_back(Partition::from_blocks(n, blocks));
    return out;
}

Partition coarsen(const Partition& p, const Partition& coarse) {
    std::vector<std::uint64_t> labels(p.num_vertices());
    for (VertexId v = 0; v < p.num_vertices(); ++v) labels[v] = coarse.community_of(p.community_of(v));
    return Partition::from_labels(labels);
}

Rational R(long long num, long long den) { return Rational(num) / Rational(den); }

}  // namespace resweep::testing
