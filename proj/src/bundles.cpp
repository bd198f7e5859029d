#include "growball/bundles.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "growball/errors.hpp"

namespace growball {

PartialDijkstraBallSystem::PartialDijkstraBallSystem(const Graph& g) : n_(g.vertex_count()) {
    states_.reserve(n_);
    for (VertexId v = 0; v < n_; ++v) states_.emplace_back(g, v);
}

std::optional<ElementId> PartialDijkstraBallSystem::grow(BallId ball) {
    auto step = states_[ball].step();
    if (!step) return std::nullopt;
    return step->vertex;
}

BundleSet build_bundles(const Graph& g, std::size_t r, int p, const SelectOptions& options) {
    const VertexId n = g.vertex_count();
    if (n == 0) throw ParameterError("empty graph");
    if (r < 1 || r > n) throw ParameterError("bundle budget r must be in [1, n]");
    if (g.max_degree() > 3)
        throw ParameterError("bundle construction requires max degree <= 3; "
                             "apply make_constant_degree first");

    PartialDijkstraBallSystem system(g);
    BundleSet out;
    out.selection = select_centers(system, r, p, options);

    out.centers.assign(out.selection.centers.begin(), out.selection.centers.end());
    std::sort(out.centers.begin(), out.centers.end());

    std::vector<std::uint8_t> is_center(n, 0);
    for (VertexId c : out.centers) is_center[c] = 1;

    out.balls.resize(n);
    out.nearest_center.resize(n);
    for (VertexId v = 0; v < n; ++v) {
        const auto& settled = system.state(v).settled();
        out.balls[v].reserve(settled.size());
        bool found = false;
        for (const auto& s : settled) {
            out.balls[v].push_back({s.vertex, s.dist});
            if (!found && is_center[s.vertex]) {
                out.nearest_center[v] = {s.vertex, s.dist};
                found = true;
            }
        }
        if (!found) throw ContractError("bundle ball settled no center");
    }
    return out;
}

std::size_t choose_r(std::size_t n, std::size_t m) {
    if (n < 4) throw ParameterError("choose_r requires n >= 4");
    const double log_n = std::log2(static_cast<double>(n));
    const double loglog_n = std::max(1.0, std::log2(log_n));
    const double raw = static_cast<double>(m) * std::sqrt(loglog_n) / std::sqrt(log_n);
    const auto rounded = static_cast<std::size_t>(std::llround(raw));
    return std::max<std::size_t>(1, std::min(n, rounded));
}

BundleVerdict verify_bundles(const Graph& g, const BundleSet& bundles) {
    BundleVerdict verdict;
    const VertexId n = g.vertex_count();
    std::vector<std::uint8_t> is_center(n, 0);
    for (VertexId c : bundles.centers)
        if (c < n) is_center[c] = 1;

    for (VertexId v = 0; v < n && v < bundles.balls.size(); ++v) {
        DistanceTable table = dijkstra(g, v);
        const auto& ball = bundles.balls[v];

        bool prefix_ok = ball.size() <= table.settle_order.size();
        for (std::size_t i = 0; prefix_ok && i < ball.size(); ++i) {
            const VertexId u = table.settle_order[i];
            prefix_ok = ball[i].vertex == u && table.dist[u] && ball[i].dist == *table.dist[u];
        }
        if (!prefix_ok) {
            verdict.violations.push_back({v, BundleVerdict::Kind::NotPrefix});
            continue;
        }

        bool hit = false;
        for (const BallEntry& entry : ball)
            if (is_center[entry.vertex]) {
                hit = true;
                break;
            }
        if (!hit) {
            verdict.violations.push_back({v, BundleVerdict::Kind::NotHit});
            continue;
        }

        bool nearest_ok = false;
        for (VertexId u : table.settle_order) {
            if (!is_center[u]) continue;
            nearest_ok = v < bundles.nearest_center.size() &&
                         bundles.nearest_center[v].vertex == u &&
                         bundles.nearest_center[v].dist == *table.dist[u];
            break;
        }
        if (!nearest_ok)
            verdict.violations.push_back({v, BundleVerdict::Kind::WrongNearestCenter});
    }
    return verdict;
}

std::string format_bundles(const BundleSet& bundles) {
    std::ostringstream out;
    for (VertexId v = 0; v < bundles.balls.size(); ++v) {
        out << v << " : " << bundles.nearest_center[v].vertex << ' '
            << bundles.nearest_center[v].dist.raw() << " :";
        for (const BallEntry& entry : bundles.balls[v])
            out << ' ' << entry.vertex << ' ' << entry.dist.raw();
        out << '\n';
    }
    return out.str();
}

BundleSet parse_bundles(std::string_view text, VertexId vertex_count) {
    BundleSet out;
    out.balls.resize(vertex_count);
    out.nearest_center.resize(vertex_count);
    std::vector<std::uint8_t> seen(vertex_count, 0);

    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::vector<VertexId> centers;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::uint64_t v = 0, c = 0, dc = 0;
        std::string sep1, sep2;
        if (!(ls >> v >> sep1 >> c >> dc >> sep2) || sep1 != ":" || sep2 != ":")
            throw ParseError("expected 'v : c d_c : u1 d1 ...'", line_no);
        if (v >= vertex_count || c >= vertex_count)
            throw ParseError("vertex id out of range", line_no);
        if (seen[v]) throw ParseError("duplicate vertex line", line_no);
        seen[v] = 1;
        out.nearest_center[v] = {static_cast<VertexId>(c), Weight::of(dc)};
        centers.push_back(static_cast<VertexId>(c));
        std::uint64_t u = 0, d = 0;
        while (ls >> u) {
            if (!(ls >> d)) throw ParseError("dangling ball member id", line_no);
            if (u >= vertex_count) throw ParseError("ball member out of range", line_no);
            out.balls[v].push_back({static_cast<VertexId>(u), Weight::of(d)});
        }
    }
    for (VertexId v = 0; v < vertex_count; ++v)
        if (!seen[v]) throw ParseError("missing line for vertex " + std::to_string(v));

    std::sort(centers.begin(), centers.end());
    centers.erase(std::unique(centers.begin(), centers.end()), centers.end());
    out.centers = std::move(centers);
    return out;
}

} // namespace growball
