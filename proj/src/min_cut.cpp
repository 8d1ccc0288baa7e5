#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "resweep/errors.hpp"
#include "resweep/graph.hpp"
#include "resweep/partition.hpp"

namespace resweep {

namespace {

// Stoer-Wagner with a lazy max-heap for the maximum-adjacency ordering.
Weight stoer_wagner(const Graph& g) {
    const std::size_t n = g.num_vertices();
    std::vector<std::unordered_map<VertexId, Weight>> adj(n);
    for (VertexId u = 0; u < n; ++u)
        for (const Neighbor& nb : g.neighbors(u))
            if (nb.target != u) adj[u][nb.target] = nb.weight;

    std::vector<VertexId> alive(n);
    for (VertexId v = 0; v < n; ++v) alive[v] = v;
    std::vector<Weight> key(n);
    std::vector<char> added(n);
    Weight best = std::numeric_limits<Weight>::max();

    while (alive.size() > 1) {
        for (VertexId v : alive) {
            key[v] = 0;
            added[v] = 0;
        }
        std::priority_queue<std::pair<Weight, VertexId>> heap;
        for (VertexId v : alive) heap.emplace(0, v);
        VertexId prev = alive.front(), last = alive.front();
        Weight last_key = 0;
        for (std::size_t step = 0; step < alive.size(); ++step) {
            VertexId v;
            for (;;) {
                auto [k, x] = heap.top();
                heap.pop();
                if (!added[x] && k == key[x]) {
                    v = x;
                    break;
                }
            }
            added[v] = 1;
            prev = last;
            last = v;
            last_key = key[v];
            for (auto [x, w] : adj[v]) {
                if (added[x]) continue;
                key[x] += w;
                heap.emplace(key[x], x);
            }
        }
        best = std::min(best, last_key);

        // contract `last` into `prev`
        for (auto [x, w] : adj[last]) {
            if (x == prev) continue;
            adj[prev][x] += w;
            adj[x][prev] += w;
            adj[x].erase(last);
        }
        adj[prev].erase(last);
        adj[last].clear();
        alive.erase(std::find(alive.begin(), alive.end(), last));
    }
    return best;
}

}  // namespace

Weight min_cut(const Graph& g) {
    if (g.num_vertices() < 2) throw std::invalid_argument("min_cut: need at least two vertices");
    if (!is_connected(g)) throw DisconnectedError("min_cut: graph is not connected");
    if (g.num_edges() + 1 == g.num_vertices()) {
        // connected tree: every cut contains an edge, and single edges are cuts
        Weight lightest = std::numeric_limits<Weight>::max();
        for (VertexId u = 0; u < g.num_vertices(); ++u)
            for (const Neighbor& nb : g.neighbors(u))
                if (nb.target != u) lightest = std::min(lightest, nb.weight);
        return lightest;
    }
    return stoer_wagner(g);
}

}  // namespace resweep
