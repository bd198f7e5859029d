#include "growball/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "growball/dijkstra.hpp"
#include "growball/errors.hpp"

namespace growball {

std::uint64_t BaselineStats::sum_sizes() const {
    std::uint64_t total = 0;
    for (std::uint32_t s : ball_sizes) total += s;
    return total;
}

double BaselineStats::sum_xlogx() const {
    double total = 0;
    for (std::uint32_t s : ball_sizes)
        if (s > 1) total += static_cast<double>(s) * std::log2(static_cast<double>(s));
    return total;
}

BaselineStats run_baseline_random(const Graph& g, std::size_t r, std::uint64_t seed) {
    const VertexId n = g.vertex_count();
    if (n == 0 || r < 1 || r > n) throw ParameterError("baseline budget r must be in [1, n]");

    std::vector<VertexId> pool(n);
    std::iota(pool.begin(), pool.end(), VertexId{0});
    Rng rng(seed);
    for (std::size_t i = 0; i < r; ++i)
        std::swap(pool[i], pool[i + rng.below(n - i)]);
    std::vector<std::uint8_t> is_center(n, 0);
    for (std::size_t i = 0; i < r; ++i) is_center[pool[i]] = 1;

    BaselineStats stats;
    stats.centers_used = r;
    stats.ball_sizes.resize(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        PartialDijkstra walk(g, v);
        while (true) {
            auto step = walk.step();
            if (!step) {
                stats.all_hit = false;
                break;
            }
            ++stats.ball_sizes[v];
            if (is_center[step->vertex]) break;
        }
    }
    return stats;
}

BaselineStats run_baseline_folklore(const Graph& g, std::size_t r) {
    const VertexId n = g.vertex_count();
    if (n == 0 || r < 1 || r > n) throw ParameterError("baseline budget r must be in [1, n]");

    const std::size_t ball_size = (n + r - 1) / r;
    HittingState state(n, n);
    BaselineStats stats;
    stats.ball_sizes.resize(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        PartialDijkstra walk(g, v);
        for (std::size_t i = 0; i < ball_size; ++i) {
            auto step = walk.step();
            if (!step) break;
            state.add_member(v, step->vertex);
            ++stats.ball_sizes[v];
        }
    }
    auto centers = state.greedy_phase(0);
    stats.centers_used = centers.size();
    return stats;
}

} // namespace growball
