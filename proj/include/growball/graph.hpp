#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "growball/weight.hpp"

namespace growball {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

struct EdgeRecord {
    VertexId a;
    VertexId b;
    Weight weight;
};

struct AdjEntry {
    VertexId neighbor;
    Weight weight;
    EdgeId edge;
};

// Immutable undirected multigraph with non-negative weights. Vertex ids are
// dense in [0, vertex_count). Parallel edges and self-loops are allowed; a
// self-loop appears once in its endpoint's adjacency list.
class Graph {
  public:
    Graph() = default;
    Graph(VertexId vertex_count, std::vector<EdgeRecord> edges);

    VertexId vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<EdgeRecord>& edges() const { return edges_; }
    std::span<const AdjEntry> neighbors(VertexId v) const { return adjacency_[v]; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    std::size_t max_degree() const;
    bool has_zero_weight_edge() const;

  private:
    VertexId vertex_count_ = 0;
    std::vector<EdgeRecord> edges_;
    std::vector<std::vector<AdjEntry>> adjacency_;
};

// Edge-list text format: first line "n m", then m lines "u v w" with
// 0 <= u,v < n and w a non-negative integer; '#' starts a comment line.
Graph parse_graph(std::string_view text);
Graph load_graph_file(const std::string& path);
std::string format_graph(const Graph& g);

// Component ids numbered by smallest contained vertex, in ascending order.
struct ComponentMap {
    std::vector<std::uint32_t> component_of;
    std::uint32_t count = 0;
};
ComponentMap connected_components(const Graph& g);

} // namespace growball
