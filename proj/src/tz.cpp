#include "growball/tz.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <queue>
#include <sstream>

#include "growball/dijkstra.hpp"
#include "growball/errors.hpp"

namespace growball {

namespace {

constexpr VertexId kAbsent = 0xFFFFFFFFu;

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

struct AuxEntry {
    Weight dist;
    VertexId label;
    VertexId vertex;
};
struct AuxCompare {
    bool operator()(const AuxEntry& a, const AuxEntry& b) const {
        if (a.dist < b.dist) return false;
        if (b.dist < a.dist) return true;
        if (a.label != b.label) return a.label > b.label;
        return a.vertex > b.vertex; // min-heap on (dist, label, vertex)
    }
};

bool bunch_sets_equal(const LevelState& st, VertexId x, VertexId y) {
    if (st.bunch_hash[x] != st.bunch_hash[y]) return false;
    if (st.bunch_ids[x].size() != st.bunch_ids[y].size()) return false;
    return st.bunch_ids[x] == st.bunch_ids[y];
}

// First entry of x's bunch, in x's proximity order, absent from y's bunch.
std::optional<BunchEntry> first_missing(const LevelState& st, VertexId x, VertexId y) {
    const auto& ids = st.bunch_ids[y];
    for (const BunchEntry& e : st.bunch[x])
        if (!std::binary_search(ids.begin(), ids.end(), e.vertex)) return e;
    return std::nullopt;
}

void append_to_bunch(LevelState& st, VertexId v, BunchEntry entry) {
    st.bunch[v].push_back(entry);
    auto& ids = st.bunch_ids[v];
    ids.insert(std::upper_bound(ids.begin(), ids.end(), entry.vertex), entry.vertex);
    st.bunch_hash[v] ^= mix64(entry.vertex);
    if (st.bunch[v].size() == st.universe_in_component[v]) st.full[v] = 1;
}

void grow_step_impl(const Graph& g, LevelState& st, bool unhit_only) {
    const VertexId n = g.vertex_count();
    if (st.bunch.size() != n || st.full.size() != n || st.universe_in_component.size() != n)
        throw ContractError("level state does not match the graph");

    auto growable = [&](VertexId v) {
        return !st.full[v] && (!unhit_only || !st.hit[v]);
    };

    std::size_t j = SIZE_MAX;
    for (VertexId v = 0; v < n; ++v) {
        if (!growable(v)) continue;
        if (j == SIZE_MAX)
            j = st.bunch[v].size();
        else if (st.bunch[v].size() != j)
            throw ContractError("grow step requires all growable bunches to share one size");
    }
    if (j == SIZE_MAX) return; // every bunch hit or full
    if (j == 0) throw ContractError("grow step requires bunch size >= 1");

    std::priority_queue<AuxEntry, std::vector<AuxEntry>, AuxCompare> heap;
    for (const EdgeRecord& e : g.edges()) {
        if (e.a == e.b) continue;
        const VertexId ends[2][2] = {{e.a, e.b}, {e.b, e.a}};
        for (const auto& dir : ends) {
            const VertexId x = dir[0], y = dir[1];
            if (!growable(y)) continue;
            if (growable(x) && bunch_sets_equal(st, x, y)) continue; // kept edge
            auto w = first_missing(st, x, y);
            if (!w)
                throw ContractError("neighboring bunch offers no new vertex; "
                                    "a hit bunch must contain a center absent from "
                                    "every unhit bunch");
            heap.push({w->dist + e.weight, w->vertex, y});
        }
    }

    std::vector<std::uint8_t> settled(n, 0);
    std::vector<BunchEntry> found(n);
    while (!heap.empty()) {
        AuxEntry top = heap.top();
        heap.pop();
        if (settled[top.vertex]) continue;
        settled[top.vertex] = 1;
        found[top.vertex] = {top.label, top.dist};
        for (const AdjEntry& a : g.neighbors(top.vertex)) {
            const VertexId y = a.neighbor;
            if (y == top.vertex || settled[y] || !growable(y)) continue;
            if (!bunch_sets_equal(st, top.vertex, y)) continue;
            heap.push({top.dist + a.weight, top.label, y});
        }
    }

    for (VertexId v = 0; v < n; ++v) {
        if (!growable(v)) continue;
        if (!settled[v])
            throw ContractError("growable bunch received no extension; "
                                "component universe accounting is broken");
        append_to_bunch(st, v, found[v]);
    }
}

} // namespace

std::vector<std::optional<BunchEntry>> nearest_in_set(const Graph& g,
                                                      std::span<const VertexId> members) {
    if (members.empty()) throw ParameterError("nearest_in_set requires a non-empty set");
    const VertexId n = g.vertex_count();
    std::priority_queue<AuxEntry, std::vector<AuxEntry>, AuxCompare> heap;
    for (VertexId a : members) {
        if (a >= n) throw ParameterError("set member out of range");
        heap.push({Weight::zero(), a, a});
    }
    std::vector<std::optional<BunchEntry>> out(n);
    std::vector<std::uint8_t> settled(n, 0);
    while (!heap.empty()) {
        AuxEntry top = heap.top();
        heap.pop();
        if (settled[top.vertex]) continue;
        settled[top.vertex] = 1;
        out[top.vertex] = BunchEntry{top.label, top.dist};
        for (const AdjEntry& a : g.neighbors(top.vertex)) {
            if (settled[a.neighbor]) continue;
            heap.push({top.dist + a.weight, top.label, a.neighbor});
        }
    }
    return out;
}

void refresh_derived(const Graph& g, LevelState& st) {
    const VertexId n = g.vertex_count();
    if (g.has_zero_weight_edge())
        throw ParameterError("bunch growth requires strictly positive edge weights");
    if (!std::is_sorted(st.universe.begin(), st.universe.end()) ||
        std::adjacent_find(st.universe.begin(), st.universe.end()) != st.universe.end())
        throw ParameterError("level universe must be sorted and duplicate-free");
    for (VertexId a : st.universe)
        if (a >= n) throw ParameterError("level universe member out of range");
    if (st.bunch.size() != n) throw ParameterError("level state bunch count != n");
    if (st.hit.size() != n) st.hit.assign(n, 0);

    ComponentMap comps = connected_components(g);
    std::vector<std::uint32_t> universe_per_comp(comps.count, 0);
    for (VertexId a : st.universe) ++universe_per_comp[comps.component_of[a]];

    st.bunch_ids.assign(n, {});
    st.bunch_hash.assign(n, 0);
    st.full.assign(n, 0);
    st.universe_in_component.assign(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        st.universe_in_component[v] = universe_per_comp[comps.component_of[v]];
        auto& ids = st.bunch_ids[v];
        ids.reserve(st.bunch[v].size());
        for (const BunchEntry& e : st.bunch[v]) {
            if (!std::binary_search(st.universe.begin(), st.universe.end(), e.vertex))
                throw ParameterError("bunch member outside the level universe");
            ids.push_back(e.vertex);
            st.bunch_hash[v] ^= mix64(e.vertex);
        }
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw ParameterError("bunch contains a duplicate member");
        if (st.bunch[v].size() >= st.universe_in_component[v]) st.full[v] = 1;
    }
}

LevelState make_level_state(const Graph& g, std::vector<VertexId> universe) {
    LevelState st;
    st.universe = std::move(universe);
    std::sort(st.universe.begin(), st.universe.end());
    st.universe.erase(std::unique(st.universe.begin(), st.universe.end()), st.universe.end());
    if (st.universe.empty()) throw ParameterError("level universe must be non-empty");

    st.bunch.assign(g.vertex_count(), {});
    st.hit.assign(g.vertex_count(), 0);
    auto nearest = nearest_in_set(g, st.universe);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (nearest[v]) st.bunch[v].push_back(*nearest[v]);
    refresh_derived(g, st);
    return st;
}

void grow_all_step(const Graph& g, LevelState& st) { grow_step_impl(g, st, false); }
void grow_unhit_step(const Graph& g, LevelState& st) { grow_step_impl(g, st, true); }

namespace {

// Plays the ball-growth game for one oracle level: ball i belongs to vertex
// owners[i] and reveals that vertex's bunch in proximity order. Batches are
// advanced lazily with grow_unhit_step, so every unhit bunch is extended by
// one Dijkstra run shared across the whole level.
class TzLevelSystem final : public GrowableBallSystem {
  public:
    TzLevelSystem(const Graph& g, LevelState state, std::span<const VertexId> owners)
        : graph_(&g), st_(std::move(state)), owners_(owners.begin(), owners.end()) {
        consumed_.assign(owners_.size(), 0);
        sizes_before_.assign(owners_.size(), 0);
        balls_with_vertex_.assign(g.vertex_count(), {});
        is_center_vertex_.assign(g.vertex_count(), 0);
        for (BallId i = 0; i < owners_.size(); ++i)
            for (const BunchEntry& e : st_.bunch[owners_[i]])
                balls_with_vertex_[e.vertex].push_back(i);
    }

    std::size_t universe_size() const override { return st_.universe.size(); }
    std::size_t ball_count() const override { return owners_.size(); }

    std::optional<ElementId> grow(BallId ball) override {
        const VertexId v = owners_[ball];
        if (consumed_[ball] == st_.bunch[v].size()) {
            if (st_.full[v]) return std::nullopt;
            advance_batch();
            if (consumed_[ball] == st_.bunch[v].size()) return std::nullopt;
        }
        const BunchEntry& e = st_.bunch[v][consumed_[ball]++];
        return element_index(e.vertex);
    }

    void note_center(ElementId element) override {
        const VertexId c = st_.universe[element];
        is_center_vertex_[c] = 1;
        for (BallId b : balls_with_vertex_[c]) st_.hit[owners_[b]] = 1;
    }

    const LevelState& state() const { return st_; }
    std::uint32_t consumed(BallId ball) const { return consumed_[ball]; }

  private:
    ElementId element_index(VertexId v) const {
        auto it = std::lower_bound(st_.universe.begin(), st_.universe.end(), v);
        return static_cast<ElementId>(it - st_.universe.begin());
    }

    void advance_batch() {
        for (BallId i = 0; i < owners_.size(); ++i)
            sizes_before_[i] = st_.bunch[owners_[i]].size();
        grow_unhit_step(*graph_, st_);
        for (BallId i = 0; i < owners_.size(); ++i) {
            const VertexId v = owners_[i];
            for (std::size_t s = sizes_before_[i]; s < st_.bunch[v].size(); ++s) {
                const VertexId w = st_.bunch[v][s].vertex;
                balls_with_vertex_[w].push_back(i);
                if (is_center_vertex_[w]) st_.hit[v] = 1;
            }
        }
    }

    const Graph* graph_;
    LevelState st_;
    std::vector<VertexId> owners_;
    std::vector<std::uint32_t> consumed_;
    std::vector<std::size_t> sizes_before_;
    std::vector<std::vector<BallId>> balls_with_vertex_;
    std::vector<std::uint8_t> is_center_vertex_;
};

} // namespace

LevelBuildResult build_level(const Graph& g, std::span<const VertexId> level_set,
                             std::span<const VertexId> owners, std::size_t budget,
                             const SelectOptions& options) {
    LevelState st = make_level_state(g, {level_set.begin(), level_set.end()});

    LevelBuildResult out;
    out.pivots.assign(g.vertex_count(), std::nullopt);
    for (VertexId v : owners) {
        if (st.bunch[v].empty())
            throw ParameterError("ball owner cannot reach the level set");
        out.pivots[v] = st.bunch[v].front();
    }

    TzLevelSystem system(g, std::move(st), owners);
    out.selection = select_centers(system, budget, /*p=*/1, options);

    out.next_level.reserve(out.selection.centers.size());
    for (ElementId e : out.selection.centers)
        out.next_level.push_back(system.state().universe[e]);
    std::sort(out.next_level.begin(), out.next_level.end());

    out.bunches.assign(g.vertex_count(), {});
    for (BallId i = 0; i < owners.size(); ++i) {
        const VertexId v = owners[i];
        const auto& full_bunch = system.state().bunch[v];
        out.bunches[v].assign(full_bunch.begin(), full_bunch.begin() + system.consumed(i));
    }
    return out;
}

LevelBuildResult build_level(const Graph& g, std::span<const VertexId> level_set,
                             std::uint32_t k) {
    if (k < 1) throw ParameterError("k must be >= 1");
    std::vector<VertexId> owners(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) owners[v] = v;
    const double root = std::pow(static_cast<double>(g.vertex_count()), 1.0 / k);
    std::size_t budget = std::max<std::size_t>(
        1, static_cast<std::size_t>(std::ceil(static_cast<double>(level_set.size()) / root)));
    budget = std::min(budget, level_set.size());
    return build_level(g, level_set, owners, budget);
}

std::uint64_t Oracle::stored_pairs() const {
    std::uint64_t total = 0;
    for (const auto& row : table) total += row.size();
    return total;
}

const OracleEntry* Oracle::lookup(VertexId v, VertexId w) const {
    const auto& row = table[v];
    auto it = std::lower_bound(row.begin(), row.end(), w,
                               [](const OracleEntry& e, VertexId id) { return e.vertex < id; });
    if (it == row.end() || it->vertex != w) return nullptr;
    return &*it;
}

std::optional<Weight> Oracle::query(VertexId u, VertexId v) const {
    if (u >= n || v >= n) throw ParameterError("query vertex out of range");
    VertexId w = u;
    Weight dist_wu = Weight::zero();
    std::uint32_t i = 0;
    const OracleEntry* entry;
    while ((entry = lookup(v, w)) == nullptr) {
        ++i;
        if (i >= k) return std::nullopt; // different components
        std::swap(u, v);
        const PivotEntry& pivot = pivots[i][u];
        if (!pivot.present) return std::nullopt;
        w = pivot.vertex;
        dist_wu = pivot.dist;
    }
    return dist_wu + entry->dist;
}

TzBuild build_oracle(const Graph& g, std::uint32_t k, const SelectOptions& options) {
    if (k < 1) throw ParameterError("k must be >= 1");
    const VertexId n = g.vertex_count();
    if (n == 0) throw ParameterError("empty graph");
    if (g.has_zero_weight_edge())
        throw ParameterError("oracle construction requires strictly positive edge weights");

    TzBuild build;
    Oracle& o = build.oracle;
    o.k = k;
    o.n = n;
    o.pivots.assign(k, std::vector<PivotEntry>(n));
    o.table.assign(n, {});

    ComponentMap comps = connected_components(g);
    std::vector<std::vector<VertexId>> comp_vertices(comps.count);
    for (VertexId v = 0; v < n; ++v) comp_vertices[comps.component_of[v]].push_back(v);

    for (std::uint32_t c = 0; c < comps.count; ++c) {
        const auto& owners = comp_vertices[c];
        const double comp_n = static_cast<double>(owners.size());
        const double root = std::pow(comp_n, 1.0 / k);

        std::vector<VertexId> level = owners; // A_0
        for (std::uint32_t i = 0; i + 1 < k; ++i) {
            std::size_t budget = std::max<std::size_t>(
                1,
                static_cast<std::size_t>(std::ceil(static_cast<double>(level.size()) / root)));
            if (i + 2 == k) {
                // Keep |A_{k-1}| <= floor(n^{1/k}) so the all-pairs last level
                // stays within the n^{1+1/k} size term.
                budget = std::min(budget,
                                  std::max<std::size_t>(
                                      1, static_cast<std::size_t>(std::floor(root))));
            }
            budget = std::min(budget, level.size());

            LevelBuildResult lvl = build_level(g, level, owners, budget, options);
            std::uint64_t sum_sizes = 0;
            for (VertexId v : owners) {
                o.pivots[i][v] = {lvl.pivots[v]->vertex, lvl.pivots[v]->dist, true};
                sum_sizes += lvl.bunches[v].size();
                for (const BunchEntry& e : lvl.bunches[v])
                    o.table[v].push_back({e.vertex, i, e.dist});
            }
            build.stats.levels.push_back({c, i, owners.size(), level.size(), budget,
                                          lvl.next_level.size(), sum_sizes, true});
            level = std::move(lvl.next_level);
        }

        // Last level: B_{k-1}(v) is the whole of A_{k-1}, with true distances.
        auto last_pivots = nearest_in_set(g, level);
        for (VertexId v : owners)
            o.pivots[k - 1][v] = {last_pivots[v]->vertex, last_pivots[v]->dist, true};
        for (VertexId a : level) {
            DistanceTable t = dijkstra(g, a);
            for (VertexId v : owners) o.table[v].push_back({a, k - 1, *t.dist[v]});
        }
        build.stats.levels.push_back({c, k - 1, owners.size(), level.size(), level.size(),
                                      level.size(),
                                      static_cast<std::uint64_t>(owners.size()) * level.size(),
                                      false});

        build.stats.size_bound += 16.0 * k * comp_n * root + comp_n * root;
    }

    for (VertexId v = 0; v < n; ++v) {
        auto& row = o.table[v];
        std::sort(row.begin(), row.end(), [](const OracleEntry& a, const OracleEntry& b) {
            if (a.vertex != b.vertex) return a.vertex < b.vertex;
            return a.level < b.level;
        });
        row.erase(std::unique(row.begin(), row.end(),
                              [](const OracleEntry& a, const OracleEntry& b) {
                                  return a.vertex == b.vertex;
                              }),
                  row.end());
    }
    build.stats.stored_pairs = o.stored_pairs();
    return build;
}

namespace {

void put_u32(std::string& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void put_u64(std::string& out, std::uint64_t v) {
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

struct ByteReader {
    std::string_view bytes;
    std::size_t pos = 0;
    std::uint32_t u32() {
        if (pos + 4 > bytes.size()) throw ParseError("oracle snapshot truncated");
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i)
            v |= static_cast<std::uint32_t>(static_cast<unsigned char>(bytes[pos + i])) << (8 * i);
        pos += 4;
        return v;
    }
    std::uint64_t u64() {
        if (pos + 8 > bytes.size()) throw ParseError("oracle snapshot truncated");
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i)
            v |= static_cast<std::uint64_t>(static_cast<unsigned char>(bytes[pos + i])) << (8 * i);
        pos += 8;
        return v;
    }
};

constexpr char kMagic[4] = {'G', 'B', 'T', 'Z'};
constexpr std::uint32_t kVersion = 1;

} // namespace

std::string serialize_oracle(const Oracle& oracle) {
    std::string out;
    out.append(kMagic, 4);
    put_u32(out, kVersion);
    put_u32(out, oracle.k);
    put_u32(out, oracle.n);
    for (std::uint32_t i = 0; i < oracle.k; ++i)
        for (VertexId v = 0; v < oracle.n; ++v) {
            const PivotEntry& p = oracle.pivots[i][v];
            put_u32(out, p.present ? p.vertex : kAbsent);
            put_u64(out, p.present ? p.dist.raw() : 0);
        }
    for (VertexId v = 0; v < oracle.n; ++v) {
        put_u32(out, static_cast<std::uint32_t>(oracle.table[v].size()));
        for (const OracleEntry& e : oracle.table[v]) {
            put_u32(out, e.vertex);
            put_u32(out, e.level);
            put_u64(out, e.dist.raw());
        }
    }
    return out;
}

Oracle deserialize_oracle(std::string_view bytes) {
    ByteReader reader{bytes};
    if (bytes.size() < 4 || std::memcmp(bytes.data(), kMagic, 4) != 0)
        throw ParseError("not an oracle snapshot (bad magic)");
    reader.pos = 4;
    if (reader.u32() != kVersion) throw ParseError("unsupported oracle snapshot version");

    Oracle o;
    o.k = reader.u32();
    o.n = reader.u32();
    if (o.k < 1) throw ParseError("oracle snapshot has k < 1");
    o.pivots.assign(o.k, std::vector<PivotEntry>(o.n));
    for (std::uint32_t i = 0; i < o.k; ++i)
        for (VertexId v = 0; v < o.n; ++v) {
            std::uint32_t id = reader.u32();
            std::uint64_t dist = reader.u64();
            if (id == kAbsent)
                o.pivots[i][v] = {};
            else if (id >= o.n)
                throw ParseError("oracle snapshot pivot out of range");
            else
                o.pivots[i][v] = {id, Weight::of(dist), true};
        }
    o.table.assign(o.n, {});
    for (VertexId v = 0; v < o.n; ++v) {
        std::uint32_t count = reader.u32();
        auto& row = o.table[v];
        row.reserve(count);
        VertexId prev = 0;
        for (std::uint32_t idx = 0; idx < count; ++idx) {
            std::uint32_t id = reader.u32();
            std::uint32_t level = reader.u32();
            std::uint64_t dist = reader.u64();
            if (id >= o.n || level >= o.k) throw ParseError("oracle snapshot entry out of range");
            if (idx > 0 && id <= prev) throw ParseError("oracle snapshot table not sorted");
            prev = id;
            row.push_back({id, level, Weight::of(dist)});
        }
    }
    if (reader.pos != bytes.size()) throw ParseError("oracle snapshot has trailing bytes");
    return o;
}

void save_oracle(const Oracle& oracle, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    const std::string bytes = serialize_oracle(oracle);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw ParseError("failed writing oracle snapshot to '" + path + "'");
}

Oracle load_oracle(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open oracle snapshot '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return deserialize_oracle(buf.str());
}

} // namespace growball
