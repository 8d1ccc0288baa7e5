#include "resweep/engine.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "resweep/errors.hpp"
#include "resweep/measures.hpp"

namespace resweep {

bool Engine::HeapOrder::operator()(const HeapEntry& x, const HeapEntry& y) const {
    const auto c = compare_fractions(x.key.num, x.key.den, y.key.num, y.key.den);
    if (c != std::strong_ordering::equal) return c == std::strong_ordering::less;
    // equal keys: the smaller (a, b) must surface first
    return x.a != y.a ? x.a > y.a : x.b > y.b;
}

Engine::Engine(const Graph& g) { init(g, Partition::singletons(g.num_vertices())); }

Engine::Engine(const Graph& g, const Partition& start) { init(g, start); }

void Engine::init(const Graph& g, const Partition& start) {
    const std::size_t n = g.num_vertices();
    const auto agg = CommunityAggregates::build(g, start);
    total_ = g.total_weight();
    live_ = start.size();
    degree_.assign(n, 0);
    internal_.assign(n, 0);
    version_.assign(n, 0);
    alive_.assign(n, 0);
    cross_.assign(n, {});
    parent_.resize(n);

    std::vector<VertexId> rep(start.size());
    for (CommunityId c = 0; c < start.size(); ++c) {
        const VertexId r = start.block(c).front();
        rep[c] = r;
        alive_[r] = 1;
        degree_[r] = agg.degree(c);
        internal_[r] = agg.internal(c);
        for (VertexId v : start.block(c)) parent_[v] = r;
    }
    diagonal_ = agg.diagonal_weight();
    degree_sq_ = agg.degree_square_sum();
    for (const auto& pw : agg.adjacent_pairs()) {
        const VertexId a = rep[pw.first], b = rep[pw.second];
        cross_[a][b] = pw.weight;
        cross_[b][a] = pw.weight;
        push_pair(a, b, pw.weight);
    }
    sweep_t_ = resolution();
    if (const HeapEntry* e = top()) sweep_key_ = e->key;
}

void Engine::push_pair(VertexId a, VertexId b, Weight w) {
    if (a > b) std::swap(a, b);
    const Key key{static_cast<u128>(w), static_cast<u128>(degree_[a]) * static_cast<u128>(degree_[b])};
    heap_.push({key, a, b, version_[a], version_[b]});
}

bool Engine::valid(const HeapEntry& e) const {
    return alive_[e.a] && alive_[e.b] && version_[e.a] == e.va && version_[e.b] == e.vb;
}

const Engine::HeapEntry* Engine::top() {
    while (!heap_.empty() && !valid(heap_.top())) heap_.pop();
    return heap_.empty() ? nullptr : &heap_.top();
}

ExactRatio Engine::key_resolution(const Key& key) const {
    return ExactRatio(static_cast<u128>(total_) * key.num, key.den);
}

bool Engine::at_sweep_resolution(const Key& key) const {
    return !sweep_t_.is_zero() &&
           compare_fractions(key.num, key.den, sweep_key_.num, sweep_key_.den) == std::strong_ordering::equal;
}

ExactRatio Engine::resolution() {
    const HeapEntry* e = top();
    return e ? key_resolution(e->key) : ExactRatio{};
}

std::pair<VertexId, VertexId> Engine::merge_step() {
    const HeapEntry* e = top();
    if (e == nullptr || !at_sweep_resolution(e->key))
        throw IllegalStateError("merge_step: no pair at the sweep resolution");
    const VertexId a = e->a, b = e->b;
    heap_.pop();

    const Weight w_ab = cross_[a].at(b);
    const auto da = static_cast<u128>(degree_[a]), db = static_cast<u128>(degree_[b]);
    degree_sq_ += 2 * da * db;  // (da + db)^2 - da^2 - db^2
    diagonal_ += 2 * w_ab;
    internal_[a] += internal_[b] + 2 * w_ab;
    degree_[a] += degree_[b];

    cross_[a].erase(b);
    auto absorbed = std::move(cross_[b]);
    cross_[b] = {};
    absorbed.erase(a);
    for (auto [x, w] : absorbed) {
        cross_[a][x] += w;
        auto& row = cross_[x];
        row.erase(b);
        row[a] += w;
    }

    alive_[b] = 0;
    ++version_[a];
    ++version_[b];
    parent_[b] = a;
    --live_;
    for (auto [x, w] : cross_[a]) push_pair(a, x, w);
    return {a, b};
}

ExactRatio Engine::begin_sweep() {
    const HeapEntry* e = top();
    if (e == nullptr) throw IllegalStateError("begin_sweep: resolution is zero");
    sweep_key_ = e->key;
    sweep_t_ = key_resolution(e->key);
    return sweep_t_;
}

TraceRecord Engine::resolution_sweep() {
    begin_sweep();
    for (const HeapEntry* e = top(); e != nullptr && at_sweep_resolution(e->key); e = top()) merge_step();
    return snapshot();
}

TraceRecord Engine::snapshot() {
    TraceRecord r;
    r.t = resolution();
    r.k = live_;
    r.q_t = q(r.t.to_double());
    r.q_1 = q(1.0);
    r.alpha = alpha().to_double();
    return r;
}

ExactRatio Engine::alpha() const {
    const auto z = static_cast<u128>(total_);
    return ExactRatio(degree_sq_, z * z);
}

double Engine::q(double s) const {
    const auto z = static_cast<long double>(total_);
    return static_cast<double>(static_cast<long double>(diagonal_) / z -
                               static_cast<long double>(s) * (static_cast<long double>(degree_sq_) / (z * z)));
}

Rational Engine::q_exact(const ExactRatio& s) const {
    const Rational z = to_rational(static_cast<u128>(total_));
    return Rational(diagonal_) / z - s.to_rational() * to_rational(degree_sq_) / (z * z);
}

std::vector<std::pair<VertexId, VertexId>> Engine::zero_pairs() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    for (VertexId a = 0; a < cross_.size(); ++a) {
        if (!alive_[a]) continue;
        for (auto [x, w] : cross_[a]) {
            if (x < a) continue;
            const Key key{static_cast<u128>(w), static_cast<u128>(degree_[a]) * static_cast<u128>(degree_[x])};
            if (at_sweep_resolution(key)) out.emplace_back(a, x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

VertexId Engine::find(VertexId v) {
    VertexId root = v;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[v] != root) {
        const VertexId next = parent_[v];
        parent_[v] = root;
        v = next;
    }
    return root;
}

Partition Engine::partition() {
    std::vector<std::uint64_t> labels(parent_.size());
    for (VertexId v = 0; v < parent_.size(); ++v) labels[v] = find(v);
    return Partition::from_labels(labels);
}

DetectResult detect(const Graph& g, const DetectOptions& options) {
    require_positive(options.t_min);
    Engine engine(g);
    DetectResult result;
    result.trace.push_back(engine.snapshot());
    for (;;) {
        const ExactRatio t = engine.resolution();
        if (t.is_zero() || t < options.t_min) break;
        result.trace.push_back(engine.resolution_sweep());
    }
    result.partition = engine.partition();
    if (options.ensure_connected) result.partition = refine_connected(g, result.partition);
    return result;
}

void write_trace_csv(std::ostream& out, const std::vector<TraceRecord>& trace) {
    out << "step,t,k,q_t,q_1,alpha\n";
    char buf[256];
    for (std::size_t i = 0; i < trace.size(); ++i) {
        const auto& r = trace[i];
        std::snprintf(buf, sizeof buf, "%zu,%.12g,%zu,%.12g,%.12g,%.12g\n", i, r.t.to_double(), r.k, r.q_t, r.q_1,
                      r.alpha);
        out << buf;
    }
}

}  // namespace resweep
