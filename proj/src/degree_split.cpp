#include "growball/degree_split.hpp"

#include <numeric>

#include "growball/errors.hpp"

namespace growball {

DegreeSplitResult split_degrees(const Graph& g, std::size_t cap) {
    if (cap < 3) throw ParameterError("degree cap must be at least 3");

    const VertexId n = g.vertex_count();
    const std::size_t per_copy = cap - 2;

    std::vector<std::uint32_t> copies(n, 1);
    for (VertexId v = 0; v < n; ++v) {
        std::size_t deg = g.degree(v);
        if (deg > cap) copies[v] = static_cast<std::uint32_t>((deg + per_copy - 1) / per_copy);
    }

    // Copy t of vertex v (t >= 1) lives at extra_base[v] + t - 1; copy 0 is v.
    std::vector<VertexId> extra_base(n, 0);
    VertexId next_id = n;
    for (VertexId v = 0; v < n; ++v) {
        extra_base[v] = next_id;
        next_id += copies[v] - 1;
    }

    auto copy_id = [&](VertexId v, std::uint32_t t) -> VertexId {
        return t == 0 ? v : extra_base[v] + (t - 1);
    };

    // Slot of each edge occurrence within its endpoint's adjacency list;
    // endpoints of an edge choose their copies independently.
    std::vector<std::uint32_t> slot_a(g.edge_count(), 0);
    std::vector<std::uint32_t> slot_b(g.edge_count(), 0);
    for (VertexId v = 0; v < n; ++v) {
        auto adj = g.neighbors(v);
        for (std::uint32_t idx = 0; idx < adj.size(); ++idx) {
            const EdgeRecord& rec = g.edges()[adj[idx].edge];
            if (rec.a == rec.b) {
                slot_a[adj[idx].edge] = idx;
                slot_b[adj[idx].edge] = idx;
            } else if (rec.a == v) {
                slot_a[adj[idx].edge] = idx;
            } else {
                slot_b[adj[idx].edge] = idx;
            }
        }
    }

    std::vector<EdgeRecord> out_edges;
    out_edges.reserve(g.edge_count() + (next_id - n));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const EdgeRecord& rec = g.edges()[e];
        out_edges.push_back({copy_id(rec.a, slot_a[e] % copies[rec.a]),
                             copy_id(rec.b, slot_b[e] % copies[rec.b]), rec.weight});
    }
    for (VertexId v = 0; v < n; ++v)
        for (std::uint32_t t = 0; t + 1 < copies[v]; ++t)
            out_edges.push_back({copy_id(v, t), copy_id(v, t + 1), Weight::zero()});

    DegreeSplitResult result;
    result.graph = Graph(next_id, std::move(out_edges));
    result.representative.resize(n);
    std::iota(result.representative.begin(), result.representative.end(), VertexId{0});
    result.original_of.resize(next_id);
    std::iota(result.original_of.begin(), result.original_of.begin() + n, VertexId{0});
    for (VertexId v = 0; v < n; ++v)
        for (std::uint32_t t = 1; t < copies[v]; ++t) result.original_of[copy_id(v, t)] = v;
    return result;
}

DegreeSplitResult make_constant_degree(const Graph& g) { return split_degrees(g, 3); }

} // namespace growball
