#include "growball/generators.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "growball/errors.hpp"

namespace growball {

namespace {

Weight draw_weight(Rng& rng, const GeneratorSpec& spec) {
    if (spec.weight_min > spec.weight_max)
        throw ParameterError("weight range is empty");
    return Weight::of(rng.range(spec.weight_min, spec.weight_max));
}

Graph path_like(const GeneratorSpec& spec, bool close_cycle) {
    if (spec.n < 1) throw ParameterError("n must be >= 1");
    if (close_cycle && spec.n < 3) throw ParameterError("cycle needs n >= 3");
    Rng rng(spec.seed);
    std::vector<EdgeRecord> edges;
    for (VertexId v = 0; v + 1 < spec.n; ++v)
        edges.push_back({v, v + 1, draw_weight(rng, spec)});
    if (close_cycle)
        edges.push_back({static_cast<VertexId>(spec.n - 1), 0, draw_weight(rng, spec)});
    return Graph(static_cast<VertexId>(spec.n), std::move(edges));
}

Graph grid(const GeneratorSpec& spec) {
    if (spec.n < 1) throw ParameterError("n must be >= 1");
    // Largest divisor <= sqrt(n) gives the most square lattice; primes
    // degenerate to a path.
    std::size_t rows = 1;
    for (std::size_t d = 1; d * d <= spec.n; ++d)
        if (spec.n % d == 0) rows = d;
    const std::size_t cols = spec.n / rows;
    Rng rng(spec.seed);
    std::vector<EdgeRecord> edges;
    auto id = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * cols + c); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1), draw_weight(rng, spec)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c), draw_weight(rng, spec)});
        }
    return Graph(static_cast<VertexId>(spec.n), std::move(edges));
}

void check_m_feasible(std::size_t n, std::size_t m) {
    const std::size_t max_edges = n * (n - 1) / 2;
    if (m + 1 < n || m > max_edges)
        throw ParameterError("edge count must be in [n-1, n(n-1)/2]");
}

Graph random_gnm(const GeneratorSpec& spec) {
    if (spec.n < 1) throw ParameterError("n must be >= 1");
    check_m_feasible(spec.n, spec.m);
    Rng rng(spec.seed);
    std::vector<EdgeRecord> edges;
    std::set<std::pair<VertexId, VertexId>> used;
    for (VertexId v = 1; v < spec.n; ++v) {
        const VertexId u = static_cast<VertexId>(rng.below(v));
        edges.push_back({u, v, draw_weight(rng, spec)});
        used.emplace(u, v);
    }
    while (edges.size() < spec.m) {
        VertexId u = static_cast<VertexId>(rng.below(spec.n));
        VertexId v = static_cast<VertexId>(rng.below(spec.n));
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!used.emplace(u, v).second) continue;
        edges.push_back({u, v, draw_weight(rng, spec)});
    }
    return Graph(static_cast<VertexId>(spec.n), std::move(edges));
}

Graph random_geometric(const GeneratorSpec& spec) {
    if (spec.n < 1) throw ParameterError("n must be >= 1");
    check_m_feasible(spec.n, spec.m);
    Rng rng(spec.seed);
    std::vector<std::pair<double, double>> points(spec.n);
    for (auto& p : points) {
        p.first = rng.unit();
        p.second = rng.unit();
    }
    struct Pair {
        double dist2;
        VertexId u, v;
    };
    std::vector<Pair> pairs;
    pairs.reserve(spec.n * (spec.n - 1) / 2);
    for (VertexId u = 0; u < spec.n; ++u)
        for (VertexId v = u + 1; v < spec.n; ++v) {
            const double dx = points[u].first - points[v].first;
            const double dy = points[u].second - points[v].second;
            pairs.push_back({dx * dx + dy * dy, u, v});
        }
    std::sort(pairs.begin(), pairs.end(), [](const Pair& a, const Pair& b) {
        if (a.dist2 != b.dist2) return a.dist2 < b.dist2;
        if (a.u != b.u) return a.u < b.u;
        return a.v < b.v;
    });
    std::vector<EdgeRecord> edges;
    edges.reserve(spec.m);
    for (std::size_t i = 0; i < spec.m; ++i)
        edges.push_back({pairs[i].u, pairs[i].v, draw_weight(rng, spec)});
    return Graph(static_cast<VertexId>(spec.n), std::move(edges));
}

} // namespace

Graph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
    case GeneratorSpec::Family::Path: return path_like(spec, false);
    case GeneratorSpec::Family::Cycle: return path_like(spec, true);
    case GeneratorSpec::Family::Grid: return grid(spec);
    case GeneratorSpec::Family::RandomGnm: return random_gnm(spec);
    case GeneratorSpec::Family::RandomGeometric: return random_geometric(spec);
    }
    throw ParameterError("unknown generator family");
}

GeneratorSpec::Family parse_family(const std::string& name) {
    if (name == "path") return GeneratorSpec::Family::Path;
    if (name == "cycle") return GeneratorSpec::Family::Cycle;
    if (name == "grid") return GeneratorSpec::Family::Grid;
    if (name == "random-gnm" || name == "gnm") return GeneratorSpec::Family::RandomGnm;
    if (name == "random-geometric" || name == "geometric")
        return GeneratorSpec::Family::RandomGeometric;
    throw ParameterError("unknown family '" + name +
                         "' (path, cycle, grid, random-gnm, random-geometric)");
}

std::string family_name(GeneratorSpec::Family family) {
    switch (family) {
    case GeneratorSpec::Family::Path: return "path";
    case GeneratorSpec::Family::Cycle: return "cycle";
    case GeneratorSpec::Family::Grid: return "grid";
    case GeneratorSpec::Family::RandomGnm: return "random-gnm";
    case GeneratorSpec::Family::RandomGeometric: return "random-geometric";
    }
    return "?";
}

std::string spec_id(const GeneratorSpec& spec) {
    std::ostringstream out;
    out << family_name(spec.family) << "-n" << spec.n;
    if (spec.family == GeneratorSpec::Family::RandomGnm ||
        spec.family == GeneratorSpec::Family::RandomGeometric)
        out << "-m" << spec.m;
    out << "-w" << spec.weight_min << ":" << spec.weight_max << "-s" << spec.seed;
    return out.str();
}

} // namespace growball
