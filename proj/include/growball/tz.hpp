#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "growball/graph.hpp"
#include "growball/hitting.hpp"

namespace growball {

struct BunchEntry {
    VertexId vertex;
    Weight dist;
};

// One oracle level mid-construction: the level set (the universe the bunches
// draw from) and, per graph vertex, the ordered bunch of its nearest
// universe members under (distance, vertex id) order. All unhit, non-full
// bunches share one size between grow steps. Derived fields cache each
// bunch's members sorted by id, an order-free fingerprint, a full flag, and
// the number of universe members reachable from the vertex.
struct LevelState {
    std::vector<VertexId> universe; // sorted ascending
    std::vector<std::vector<BunchEntry>> bunch;
    std::vector<std::uint8_t> hit;

    // derived; maintained by grow steps, rebuilt by refresh_derived
    std::vector<std::vector<VertexId>> bunch_ids;
    std::vector<std::uint64_t> bunch_hash;
    std::vector<std::uint8_t> full;
    std::vector<std::uint32_t> universe_in_component;
};

// Nearest member of `members` per vertex with ties to the smaller member id,
// via one multi-source Dijkstra. nullopt where no member is reachable.
std::vector<std::optional<BunchEntry>> nearest_in_set(const Graph& g,
                                                      std::span<const VertexId> members);

// Level state at bunch size one (each bunch holds the vertex's nearest
// universe member). Requires strictly positive edge weights; bunch growth
// cannot reproduce the tie order exactly in the presence of zero-weight
// edges.
LevelState make_level_state(const Graph& g, std::vector<VertexId> universe);

// Recomputes the derived fields from universe/bunch/hit (for states
// assembled by hand).
void refresh_derived(const Graph& g, LevelState& st);

// Extends every non-full bunch by its next-nearest universe member, all at
// once, by one Dijkstra run on the super-source auxiliary graph. Bunches
// that already span their component's universe members are flagged full and
// left unchanged.
void grow_all_step(const Graph& g, LevelState& st);

// Same result restricted to unhit vertices, computed on the partial
// auxiliary graph that skips hit vertices entirely. Hit bunches may be
// frozen at smaller sizes but must each contain a vertex absent from every
// unhit bunch (a selected center).
void grow_unhit_step(const Graph& g, LevelState& st);

struct LevelBuildResult {
    std::vector<VertexId> next_level; // selected centers, sorted ascending
    std::vector<std::vector<BunchEntry>> bunches; // as-grown per vertex
    std::vector<std::optional<BunchEntry>> pivots; // nearest level-set member
    CenterSelection selection;
};

// Runs center selection (p = 1) over balls owned by `owners`, one per
// vertex, grown inside the level set via batched grow_unhit_step calls.
// The level set and owners must live in one connected piece of g.
LevelBuildResult build_level(const Graph& g, std::span<const VertexId> level_set,
                             std::span<const VertexId> owners, std::size_t budget,
                             const SelectOptions& options = {});

// Convenience for connected graphs: owners = all vertices and
// budget = max(1, ceil(n^{-1/k} |level_set|)).
LevelBuildResult build_level(const Graph& g, std::span<const VertexId> level_set,
                             std::uint32_t k);

struct PivotEntry {
    VertexId vertex = 0;
    Weight dist;
    bool present = false;
};

struct OracleEntry {
    VertexId vertex;
    std::uint32_t level;
    Weight dist;
};

// Finished distance oracle of stretch 2k-1: per-level pivots and, per
// vertex, the merged bunch table sorted by member id. Immutable; concurrent
// queries are safe.
struct Oracle {
    std::uint32_t k = 1;
    VertexId n = 0;
    std::vector<std::vector<PivotEntry>> pivots;    // [level][vertex]
    std::vector<std::vector<OracleEntry>> table;    // [vertex], sorted by member id

    std::uint64_t stored_pairs() const;
    const OracleEntry* lookup(VertexId v, VertexId w) const;

    // Estimated distance with d <= estimate <= (2k-1) d, exact for k = 1.
    // nullopt when u and v lie in different components.
    std::optional<Weight> query(VertexId u, VertexId v) const;
};

struct TzLevelStats {
    std::uint32_t component;
    std::uint32_t level;
    std::size_t component_size;
    std::size_t universe_size; // |A_i| within the component
    std::size_t budget;        // r for this level (last level: |A_{k-1}|)
    std::size_t centers;       // |A_{i+1}| (last level: |A_{k-1}|)
    std::uint64_t sum_ball_sizes;
    bool selection_level; // false for the all-pairs last level
};

struct TzBuildStats {
    std::vector<TzLevelStats> levels;
    std::uint64_t stored_pairs = 0;
    double size_bound = 0; // 2^4 k n^{1+1/k} + n^{1+1/k}, summed per component
};

struct TzBuild {
    Oracle oracle;
    TzBuildStats stats;
};

// Builds the oracle level by level; components are processed independently.
// Requires k >= 1 and strictly positive edge weights.
TzBuild build_oracle(const Graph& g, std::uint32_t k, const SelectOptions& options = {});

// Versioned little-endian binary snapshot (see README for the layout).
std::string serialize_oracle(const Oracle& oracle);
Oracle deserialize_oracle(std::string_view bytes);
void save_oracle(const Oracle& oracle, const std::string& path);
Oracle load_oracle(const std::string& path);

} // namespace growball
