#pragma once

#include <string>
#include <vector>

#include "growball/dijkstra.hpp"
#include "growball/graph.hpp"
#include "growball/hitting.hpp"

namespace growball {

// Adapter that plays the ball-growth game over a graph: ball v grows by one
// partial-Dijkstra step from v, so its members are always a settle-order
// prefix. A grow is refused once v's component is exhausted.
class PartialDijkstraBallSystem final : public GrowableBallSystem {
  public:
    explicit PartialDijkstraBallSystem(const Graph& g);

    std::size_t universe_size() const override { return n_; }
    std::size_t ball_count() const override { return n_; }
    std::optional<ElementId> grow(BallId ball) override;

    const PartialDijkstra& state(VertexId v) const { return states_[v]; }

  private:
    std::size_t n_;
    std::vector<PartialDijkstra> states_;
};

struct BallEntry {
    VertexId vertex;
    Weight dist;
};

struct BundleSet {
    std::vector<VertexId> centers; // sorted ascending
    std::vector<std::vector<BallEntry>> balls;
    std::vector<BallEntry> nearest_center; // per vertex: first center in settle order
    CenterSelection selection;             // engine statistics for this run
};

// Derandomized bundle construction: one ball per vertex, grown by partial
// Dijkstra under the center-selection engine with cost exponent p (default
// 2, which carries the x log x bound). Requires max degree <= 3 (run the
// graph through make_constant_degree first) and 1 <= r <= n.
BundleSet build_bundles(const Graph& g, std::size_t r, int p = 2,
                        const SelectOptions& options = {});

// The preprocessing budget m * sqrt(log2 log2 n) / sqrt(log2 n), rounded and
// clamped into [1, n]. Requires n >= 4.
std::size_t choose_r(std::size_t n, std::size_t m);

struct BundleVerdict {
    enum class Kind { NotPrefix, NotHit, WrongNearestCenter };
    struct Violation {
        VertexId vertex;
        Kind kind;
    };
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

// Brute-force re-check of a bundle set against the graph: every ball must be
// a settle-order prefix of a fresh Dijkstra run, contain a center, and name
// the first center of the settle order as its nearest center. Violations are
// reported, not thrown. Intended for graphs small enough for n Dijkstras.
BundleVerdict verify_bundles(const Graph& g, const BundleSet& bundles);

// Text dump, one line per vertex: "v : c d_c : u1 d1 u2 d2 ...".
std::string format_bundles(const BundleSet& bundles);
BundleSet parse_bundles(std::string_view text, VertexId vertex_count);

} // namespace growball
