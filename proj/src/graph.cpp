#include "growball/graph.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "growball/errors.hpp"

namespace growball {

namespace {

// Weights above this would risk silent overflow in long path sums.
constexpr std::uint64_t kMaxWeight = 0xFFFFFFFFull;

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

std::uint64_t parse_u64(std::string_view tok, std::size_t line, const char* what) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("expected a non-negative integer for " + std::string(what) +
                             ", got '" + std::string(tok) + "'",
                         line);
    return value;
}

std::uint64_t parse_weight(std::string_view tok, std::size_t line) {
    if (!tok.empty() && tok.front() == '-') {
        // Syntactically a number, semantically banned.
        throw ValidationError("negative weight at line " + std::to_string(line));
    }
    return parse_u64(tok, line, "weight");
}

} // namespace

Graph::Graph(VertexId vertex_count, std::vector<EdgeRecord> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)), adjacency_(vertex_count) {
    for (EdgeId e = 0; e < edges_.size(); ++e) {
        const EdgeRecord& rec = edges_[e];
        if (rec.a >= vertex_count_ || rec.b >= vertex_count_)
            throw ParameterError("edge endpoint out of range");
        adjacency_[rec.a].push_back({rec.b, rec.weight, e});
        if (rec.b != rec.a) adjacency_[rec.b].push_back({rec.a, rec.weight, e});
    }
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (const auto& list : adjacency_) best = std::max(best, list.size());
    return best;
}

bool Graph::has_zero_weight_edge() const {
    for (const EdgeRecord& e : edges_)
        if (e.weight.raw() == 0) return true;
    return false;
}

Graph parse_graph(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    bool have_header = false;
    VertexId n = 0;
    std::uint64_t m = 0;
    std::vector<EdgeRecord> edges;

    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.front() == '#') continue;
        auto toks = split_ws(line);
        if (toks.empty()) {
            if (pos > text.size()) break;
            continue;
        }
        if (!have_header) {
            if (toks.size() != 2) throw ParseError("expected header 'n m'", line_no);
            std::uint64_t n64 = parse_u64(toks[0], line_no, "vertex count");
            if (n64 > 0xFFFFFFFFull) throw ParseError("vertex count too large", line_no);
            n = static_cast<VertexId>(n64);
            m = parse_u64(toks[1], line_no, "edge count");
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (toks.size() != 3) throw ParseError("expected edge line 'u v w'", line_no);
        std::uint64_t u = parse_u64(toks[0], line_no, "endpoint");
        std::uint64_t v = parse_u64(toks[1], line_no, "endpoint");
        std::uint64_t w = parse_weight(toks[2], line_no);
        if (u >= n || v >= n) throw ParseError("endpoint out of range", line_no);
        if (w > kMaxWeight)
            throw ValidationError("weight exceeds " + std::to_string(kMaxWeight) + " at line " +
                                  std::to_string(line_no));
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), Weight::of(w)});
    }

    if (!have_header) throw ParseError("missing header 'n m'", 1);
    if (edges.size() != m)
        throw ParseError("header announced " + std::to_string(m) + " edges, found " +
                         std::to_string(edges.size()));
    return Graph(n, std::move(edges));
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open graph file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str());
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const EdgeRecord& e : g.edges())
        out << e.a << ' ' << e.b << ' ' << e.weight.raw() << '\n';
    return out.str();
}

ComponentMap connected_components(const Graph& g) {
    ComponentMap map;
    map.component_of.assign(g.vertex_count(), 0xFFFFFFFFu);
    std::vector<VertexId> stack;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (map.component_of[v] != 0xFFFFFFFFu) continue;
        const std::uint32_t id = map.count++;
        map.component_of[v] = id;
        stack.push_back(v);
        while (!stack.empty()) {
            VertexId u = stack.back();
            stack.pop_back();
            for (const AdjEntry& a : g.neighbors(u)) {
                if (map.component_of[a.neighbor] == 0xFFFFFFFFu) {
                    map.component_of[a.neighbor] = id;
                    stack.push_back(a.neighbor);
                }
            }
        }
    }
    return map;
}

} // namespace growball
