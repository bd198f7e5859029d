#pragma once

#include <vector>

#include "growball/graph.hpp"

namespace growball {

// Output of a degree-capping transform. Original vertices keep their ids
// (so representative is the identity on [0, n)); extra copies are appended
// after them. original_of maps every output vertex back to its original.
struct DegreeSplitResult {
    Graph graph;
    std::vector<VertexId> representative;
    std::vector<VertexId> original_of;
};

// Splits every vertex of degree > cap into a chain of copies joined by
// zero-weight edges, distributing its incident edges round-robin so each
// copy keeps at most cap-2 of them. All pairwise distances between
// representatives are preserved. Requires cap >= 3.
DegreeSplitResult split_degrees(const Graph& g, std::size_t cap);

// split_degrees with cap = 3: output degree <= 3, vertex count <= n + 2m.
DegreeSplitResult make_constant_degree(const Graph& g);

} // namespace growball
