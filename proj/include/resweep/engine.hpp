#pragma once

#include <cstdint>
#include <functional>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

#include "resweep/exact.hpp"
#include "resweep/graph.hpp"
#include "resweep/partition.hpp"

namespace resweep {

/// Snapshot of the first partition met at a given resolution.
struct TraceRecord {
    ExactRatio t;  // resolution t(C) of this partition
    std::size_t k = 0;
    double q_t = 0;  // Q_t(C) at t = t(C)
    double q_1 = 0;
    double alpha = 0;
};

/// Agglomerative resolution sweep over community aggregates.
///
/// The state is the quotient graph of the current partition: community
/// degrees, internal weights and sparse cross weights. A max-heap over
/// adjacent pairs, keyed exactly by w(C,C')/(d(C)d(C')), yields the
/// resolution t(C) = Z * max key. Entries are invalidated lazily through
/// per-community versions.
///
/// Community ids are the smallest vertex of the community; a merge keeps the
/// smaller id. Among pairs at the current resolution the lexicographically
/// smallest (id, id) pair is merged first.
class Engine {
public:
    explicit Engine(const Graph& g);
    /// Starts from an arbitrary partition of g instead of the singletons.
    Engine(const Graph& g, const Partition& start);

    /// t(C) of the current partition; 0 with one community or none adjacent.
    ExactRatio resolution();
    /// Resolution the current sweep works at (the resolution at the start of the sweep).
    const ExactRatio& sweep_resolution() const noexcept { return sweep_t_; }

    /// Sets the sweep resolution to t(C) and returns it. Throws
    /// IllegalStateError when t(C) = 0.
    ExactRatio begin_sweep();

    /// Merges one pair of Z0 at the sweep resolution and returns the
    /// (kept, absorbed) ids. Throws IllegalStateError when Z0 is empty.
    std::pair<VertexId, VertexId> merge_step();

    /// Sets the sweep resolution to t(C), merges until Z0 is empty and
    /// returns the snapshot of the resulting partition. Throws
    /// IllegalStateError when t(C) = 0.
    TraceRecord resolution_sweep();

    TraceRecord snapshot();

    std::size_t num_communities() const noexcept { return live_; }
    Weight total_weight() const noexcept { return total_; }
    /// alpha(C) = sum_C d(C)^2 / Z^2.
    ExactRatio alpha() const;
    double q(double s) const;
    Rational q_exact(const ExactRatio& s) const;

    /// Z0 at the sweep resolution, by a full scan (pairs as (smaller, larger) ids).
    std::vector<std::pair<VertexId, VertexId>> zero_pairs() const;

    Partition partition();

private:
    struct Key {
        u128 num;  // w(C,C')
        u128 den;  // d(C) d(C')
    };
    struct HeapEntry {
        Key key;
        VertexId a, b;  // a < b
        std::uint32_t va, vb;
    };
    struct HeapOrder {
        bool operator()(const HeapEntry& x, const HeapEntry& y) const;
    };

    void init(const Graph& g, const Partition& start);
    void push_pair(VertexId a, VertexId b, Weight w);
    bool valid(const HeapEntry& e) const;
    const HeapEntry* top();
    bool at_sweep_resolution(const Key& key) const;
    ExactRatio key_resolution(const Key& key) const;
    VertexId find(VertexId v);

    Weight total_ = 0;
    std::size_t live_ = 0;
    std::vector<Weight> degree_;
    std::vector<Weight> internal_;
    std::vector<std::uint32_t> version_;
    std::vector<char> alive_;
    std::vector<std::unordered_map<VertexId, Weight>> cross_;
    std::vector<VertexId> parent_;  // vertex -> community id, path compressed
    Weight diagonal_ = 0;           // sum_C w(C)
    u128 degree_sq_ = 0;            // sum_C d(C)^2
    std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapOrder> heap_;
    ExactRatio sweep_t_;
    Key sweep_key_{0, 1};
};

struct DetectOptions {
    ExactRatio t_min = ExactRatio::from_int(1);
    /// Split the final communities into connected pieces.
    bool ensure_connected = false;
};

struct DetectResult {
    Partition partition;
    std::vector<TraceRecord> trace;
};

/// Runs sweeps from the singleton partition while t(C) >= t_min. The result
/// is submodular for mu_{t_min}. The trace holds the singleton partition and
/// the outcome of every sweep, so its last record describes the result.
DetectResult detect(const Graph& g, const DetectOptions& options = {});

/// Trace as CSV "step,t,k,q_t,q_1,alpha", 12 significant digits.
void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace);

}  // namespace resweep
