#include "growball/dijkstra.hpp"

#include <queue>

#include "growball/errors.hpp"

namespace growball {

namespace {

struct FlatEntry {
    Weight dist;
    VertexId vertex;
};
struct FlatCompare {
    bool operator()(const FlatEntry& a, const FlatEntry& b) const {
        const auto order = compare(a.dist, b.dist);
        if (order != std::strong_ordering::equal) return order > 0;
        return a.vertex > b.vertex;
    }
};

} // namespace

DistanceTable dijkstra(const Graph& g, VertexId source) {
    if (source >= g.vertex_count()) throw ParameterError("dijkstra source out of range");

    DistanceTable table;
    table.source = source;
    table.dist.assign(g.vertex_count(), std::nullopt);

    std::vector<Weight> best(g.vertex_count(), Weight::zero());
    std::vector<std::uint8_t> state(g.vertex_count(), 0); // 0 unseen, 1 open, 2 settled
    std::priority_queue<FlatEntry, std::vector<FlatEntry>, FlatCompare> heap;

    best[source] = Weight::zero();
    state[source] = 1;
    heap.push({Weight::zero(), source});

    while (!heap.empty()) {
        FlatEntry top = heap.top();
        heap.pop();
        if (state[top.vertex] == 2 || top.dist != best[top.vertex]) continue;
        state[top.vertex] = 2;
        table.dist[top.vertex] = top.dist;
        table.settle_order.push_back(top.vertex);
        for (const AdjEntry& a : g.neighbors(top.vertex)) {
            if (state[a.neighbor] == 2) continue;
            Weight candidate = top.dist + a.weight;
            if (state[a.neighbor] == 0 || candidate < best[a.neighbor]) {
                best[a.neighbor] = candidate;
                state[a.neighbor] = 1;
                heap.push({candidate, a.neighbor});
            }
        }
    }
    return table;
}

PartialDijkstra::PartialDijkstra(const Graph& g, VertexId source)
    : graph_(&g), source_(source) {
    if (source >= g.vertex_count()) throw ParameterError("partial dijkstra source out of range");
    core_.insert(source, Weight::zero());
}

std::optional<PartialDijkstra::Step> PartialDijkstra::step() {
    auto* settled = core_.pop_min();
    if (!settled) return std::nullopt;
    const Step result{settled->vertex, settled->dist};
    settled_.push_back(result);
    for (const AdjEntry& a : graph_->neighbors(result.vertex)) {
        Weight candidate = result.dist + a.weight;
        if (auto* seen = core_.find(a.neighbor)) {
            if (!seen->done && candidate < seen->dist) core_.improve(*seen, candidate);
        } else {
            core_.insert(a.neighbor, candidate);
        }
    }
    return result;
}

} // namespace growball
