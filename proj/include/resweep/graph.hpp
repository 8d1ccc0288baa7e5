#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace resweep {

using VertexId = std::uint32_t;
using Weight = std::int64_t;

class Partition;

/// One stored entry m(v, target) of a vertex's adjacency row.
struct Neighbor {
    VertexId target;
    Weight weight;
};

/// Symmetric, positive integer-weighted graph in compressed row form.
///
/// Weights live on ordered pairs: an undirected edge {u,v} of weight w is the
/// two entries m(u,v) = m(v,u) = w, and a diagonal entry m(v,v) is stored as
/// given and counted once. Hence Z = sum_v d(v) with d(v) = sum_r m(v,r).
/// Immutable once built.
class Graph {
public:
    Graph() = default;

    std::size_t num_vertices() const noexcept { return degree_.size(); }
    /// Number of undirected non-loop edges.
    std::size_t num_edges() const noexcept { return num_edges_; }
    Weight total_weight() const noexcept { return total_; }
    Weight degree(VertexId v) const { return degree_[v]; }
    std::span<const Weight> degrees() const noexcept { return degree_; }

    /// Row of v sorted by target; includes the diagonal entry when present.
    std::span<const Neighbor> neighbors(VertexId v) const {
        return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
    }
    Weight weight(VertexId u, VertexId v) const;
    Weight loop_weight(VertexId v) const { return weight(v, v); }

private:
    friend class GraphBuilder;
    std::vector<std::size_t> offsets_{0};
    std::vector<Neighbor> adjacency_;
    std::vector<Weight> degree_;
    Weight total_ = 0;
    std::size_t num_edges_ = 0;
};

/// Accumulates weights and produces a validated Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(std::size_t num_vertices) : n_(num_vertices) {}

    /// m(u,v) += w and m(v,u) += w for u != v.
    void add_edge(VertexId u, VertexId v, Weight w);
    /// m(v,v) += diagonal, the raw diagonal entry.
    void add_diagonal(VertexId v, Weight diagonal);

    /// Throws IsolatedVertexError if some vertex ends with d(v) = 0.
    Graph build() &&;

private:
    struct Entry {
        VertexId u, v;
        Weight w;
    };
    std::size_t n_;
    std::vector<Entry> entries_;
};

/// Graph plus the vertex labels it was read with (or generated).
struct LabeledGraph {
    Graph graph;
    std::vector<std::string> labels;
    std::unordered_map<std::string, VertexId> index;

    /// Labels "0".."n-1".
    static LabeledGraph with_index_labels(Graph g);
};

/// Reads "u v [w]" lines; '#' starts a comment. A loop line "v v w" adds
/// 2w to m(v,v) so d(v) matches the adjacency-matrix row sum. Duplicate
/// lines accumulate. Vertices are numbered in order of first appearance.
LabeledGraph load_edge_list(std::istream& in);
LabeledGraph load_edge_list_file(const std::string& path);

/// Inverse of load_edge_list; weight column omitted when it is 1.
void write_edge_list(std::ostream& out, const LabeledGraph& g);

/// Community graph with m'(C,C') = sum over v in C, v' in C' of m(v,v').
/// Vertex i of the result is community i of p.
Graph quotient(const Graph& g, const Partition& p);

/// Blocks are the connected components (edges with m > 0, loops ignored).
Partition connected_components(const Graph& g);
bool is_connected(const Graph& g);

/// Global minimum cut c*: min over nonempty proper S of sum_{u in S, v not in S} m(u,v).
/// Throws DisconnectedError when g has more than one component, and
/// std::invalid_argument when g has fewer than two vertices.
Weight min_cut(const Graph& g);

}  // namespace resweep
