// Command-line driver: graph generation, bundle construction, distance
// oracle build/query, artifact verification, and benchmark sweeps.
// Data goes to stdout (or --out); logs go to stderr.
// Exit codes: 0 success, 1 verification failure, 2 usage/input error.

#include <atomic>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "growball/baselines.hpp"
#include "growball/bundles.hpp"
#include "growball/csv_report.hpp"
#include "growball/degree_split.hpp"
#include "growball/dijkstra.hpp"
#include "growball/errors.hpp"
#include "growball/generators.hpp"
#include "growball/graph.hpp"
#include "growball/tz.hpp"

using namespace growball;

namespace {

class Timer {
  public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                         start_)
            .count();
    }

  private:
    std::chrono::steady_clock::time_point start_;
};

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParameterError("cannot open '" + path + "' for writing");
    out << text;
}

std::string basename_of(const std::string& path) {
    auto pos = path.find_last_of('/');
    return pos == std::string::npos ? path : path.substr(pos + 1);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParameterError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// ----- gen ---------------------------------------------------------------

struct GenArgs {
    std::string family = "path";
    std::size_t n = 0;
    std::size_t m = 0;
    std::uint64_t wmin = 1, wmax = 100, seed = 1;
    std::string out;
};

int run_gen(const GenArgs& args) {
    GeneratorSpec spec;
    spec.family = parse_family(args.family);
    spec.n = args.n;
    spec.m = args.m;
    spec.weight_min = args.wmin;
    spec.weight_max = args.wmax;
    spec.seed = args.seed;
    write_output(format_graph(generate(spec)), args.out);
    return 0;
}

// ----- sssp-bundles -------------------------------------------------------

struct BundleArgs {
    std::string graph;
    std::size_t r = 0; // 0 = choose_r
    int p = 2;
    bool verify = false;
    bool audit = false;
    bool timings = false;
    std::string dump;
    std::string out;
};

struct BundleRunOutcome {
    BenchRow row;
    BundleSet bundles;
    bool verify_failed = false;
};

BundleRunOutcome bundle_row(const Graph& transformed, const std::string& graph_id,
                            std::size_t r, int p, bool verify, bool audit, bool timings) {
    Timer timer;
    BundleSet bundles = build_bundles(transformed, r, p);
    const double elapsed = timer.ms();

    const std::size_t n = transformed.vertex_count();
    const double ratio = static_cast<double>(n) / static_cast<double>(r);

    BenchRow row;
    row.command = "sssp-bundles";
    row.graph_id = graph_id;
    row.n = fmt_u64(n);
    row.m = fmt_u64(transformed.edge_count());
    row.k_or_r = fmt_u64(r);
    row.p = fmt_u64(p);
    row.centers_used = fmt_u64(bundles.centers.size());
    row.sum_ball_size = fmt_u64(bundles.selection.sum_sizes());
    row.sum_xlogx_cost = fmt_double(bundles.selection.sum_xlogx());

    double bound, measured;
    if (p == 2 && ratio >= 2.0) {
        bound = xlogx_bound(n, n, r);
        measured = bundles.selection.sum_xlogx();
    } else {
        bound = std::pow(2.0, (p + 1) * (p + 1)) * static_cast<double>(n) *
                std::pow(ratio, p);
        measured = evaluate_cost(bundles.selection, CostFunction::power(p));
    }
    row.bound_value = fmt_double(bound);
    row.bound_slack_ratio = fmt_double(bound > 0 ? measured / bound : 0.0);
    if (timings) row.elapsed_ms = fmt_double(elapsed);

    BundleRunOutcome outcome;
    if (verify) {
        const bool connected = connected_components(transformed).count == 1;
        bool ok = verify_bundles(transformed, bundles).ok();
        if (connected) {
            ok = ok && bundles.centers.size() <= r && measured <= bound &&
                 cost_bound_holds(bundles.selection) &&
                 round_accounting(bundles.selection).ok();
        }
        if (audit) ok = ok && tracker_ops_audit(bundles.selection).ok();
        row.verify_verdict = ok ? "ok" : "fail";
        outcome.verify_failed = !ok;
    }
    outcome.row = row;
    outcome.bundles = std::move(bundles);
    return outcome;
}

int run_bundles(const BundleArgs& args) {
    Graph raw = load_graph_file(args.graph);
    DegreeSplitResult transform = make_constant_degree(raw);
    const Graph& g = transform.graph;

    std::size_t r = args.r;
    if (r == 0)
        r = g.vertex_count() >= 4 ? choose_r(g.vertex_count(), g.edge_count()) : 1;
    if (r > g.vertex_count()) r = g.vertex_count();

    auto outcome = bundle_row(g, basename_of(args.graph), r, args.p, args.verify,
                              args.audit, args.timings);

    if (!args.dump.empty()) write_output(format_bundles(outcome.bundles), args.dump);
    write_output(csv_header() + "\n" + csv_line(outcome.row) + "\n", args.out);
    return outcome.verify_failed ? 1 : 0;
}

// ----- tz-build -----------------------------------------------------------

struct TzBuildArgs {
    std::string graph;
    std::uint32_t k = 2;
    std::string snapshot;
    std::string csv;
    bool verify = false;
    bool timings = false;
};

bool tz_stats_ok(const TzBuildStats& stats) {
    for (const TzLevelStats& lvl : stats.levels) {
        if (lvl.centers > lvl.budget) return false;
        if (!lvl.selection_level) continue;
        // Engine bound with p = 1: Sum|B_i| * r <= 16 * M * |A_i|.
        const unsigned __int128 lhs =
            static_cast<unsigned __int128>(lvl.sum_ball_sizes) * lvl.budget;
        const unsigned __int128 rhs = static_cast<unsigned __int128>(16) *
                                      lvl.component_size * lvl.universe_size;
        if (lhs > rhs) return false;
    }
    return static_cast<double>(stats.stored_pairs) <= stats.size_bound;
}

int run_tz_build(const TzBuildArgs& args) {
    Graph g = load_graph_file(args.graph);
    Timer timer;
    TzBuild build = build_oracle(g, args.k);
    const double elapsed = timer.ms();
    if (!args.snapshot.empty()) save_oracle(build.oracle, args.snapshot);

    BenchRow row;
    row.command = "tz-build";
    row.graph_id = basename_of(args.graph);
    row.n = fmt_u64(g.vertex_count());
    row.m = fmt_u64(g.edge_count());
    row.k_or_r = fmt_u64(args.k);
    if (args.k >= 2) {
        std::uint64_t first_level_centers = 0;
        for (const TzLevelStats& lvl : build.stats.levels)
            if (lvl.level == 0) first_level_centers += lvl.centers;
        row.centers_used = fmt_u64(first_level_centers);
    }
    row.sum_ball_size = fmt_u64(build.stats.stored_pairs);
    row.bound_value = fmt_double(build.stats.size_bound);
    row.bound_slack_ratio =
        fmt_double(static_cast<double>(build.stats.stored_pairs) / build.stats.size_bound);
    if (args.timings) row.elapsed_ms = fmt_double(elapsed);

    bool failed = false;
    if (args.verify) {
        const bool ok = tz_stats_ok(build.stats);
        row.verify_verdict = ok ? "ok" : "fail";
        failed = !ok;
    }
    write_output(csv_header() + "\n" + csv_line(row) + "\n", args.csv);
    return failed ? 1 : 0;
}

// ----- tz-query -----------------------------------------------------------

struct TzQueryArgs {
    std::string oracle;
    std::string pairs = "all";
    std::string graph;
    bool check_stretch = false;
    std::string out;
};

std::vector<std::pair<VertexId, VertexId>> load_pairs(const std::string& spec, VertexId n) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    if (spec == "all") {
        for (VertexId u = 0; u < n; ++u)
            for (VertexId v = u; v < n; ++v) pairs.emplace_back(u, v);
        return pairs;
    }
    std::istringstream in(read_file(spec));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::uint64_t u, v;
        if (!(ls >> u >> v)) throw ParseError("expected 'u v'", line_no);
        if (u >= n || v >= n) throw ParseError("query vertex out of range", line_no);
        pairs.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    return pairs;
}

int run_tz_query(const TzQueryArgs& args) {
    Oracle oracle = load_oracle(args.oracle);
    auto pairs = load_pairs(args.pairs, oracle.n);

    std::optional<Graph> graph;
    if (args.check_stretch) {
        if (args.graph.empty())
            throw ParameterError("--check-stretch requires --graph");
        graph = load_graph_file(args.graph);
        if (graph->vertex_count() != oracle.n)
            throw ParameterError("graph and oracle disagree on vertex count");
    }

    std::vector<std::optional<DistanceTable>> truth;
    if (graph) truth.resize(oracle.n);

    std::ostringstream out;
    std::size_t violations = 0;
    for (auto [u, v] : pairs) {
        auto estimate = oracle.query(u, v);
        out << u << ' ' << v << ' ';
        if (estimate)
            out << estimate->raw() << '\n';
        else
            out << "unreachable\n";

        if (!graph) continue;
        if (!truth[u]) truth[u] = dijkstra(*graph, u);
        const auto& exact = truth[u]->dist[v];
        bool bad = false;
        if (exact.has_value() != estimate.has_value()) {
            bad = true;
        } else if (exact) {
            const unsigned __int128 est = estimate->raw();
            const unsigned __int128 d = exact->raw();
            const unsigned __int128 stretch = 2 * static_cast<unsigned __int128>(oracle.k) - 1;
            bad = est < d || est > stretch * d || (oracle.k == 1 && est != d);
        }
        if (bad) {
            ++violations;
            std::cerr << "stretch violation at (" << u << ", " << v << "): estimate "
                      << (estimate ? std::to_string(estimate->raw()) : "unreachable")
                      << ", exact "
                      << (exact ? std::to_string(exact->raw()) : "unreachable") << "\n";
        }
    }
    write_output(out.str(), args.out);
    if (violations) {
        std::cerr << violations << " stretch violations\n";
        return 1;
    }
    return 0;
}

// ----- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string graph;
    std::string bundles;
    std::string oracle;
};

int run_verify(const VerifyArgs& args) {
    if (args.bundles.empty() && args.oracle.empty())
        throw ParameterError("verify needs --bundles or --oracle");
    int status = 0;

    if (!args.bundles.empty()) {
        Graph raw = load_graph_file(args.graph);
        DegreeSplitResult transform = make_constant_degree(raw);
        BundleSet bundles = parse_bundles(read_file(args.bundles),
                                          transform.graph.vertex_count());
        BundleVerdict verdict = verify_bundles(transform.graph, bundles);
        for (const auto& violation : verdict.violations) {
            const char* kind = violation.kind == BundleVerdict::Kind::NotPrefix
                                   ? "not a settle-order prefix"
                               : violation.kind == BundleVerdict::Kind::NotHit
                                   ? "not hit"
                                   : "wrong nearest center";
            std::cerr << "vertex " << violation.vertex << ": " << kind << "\n";
        }
        if (!verdict.ok()) status = 1;
        std::cerr << "bundles: " << (verdict.ok() ? "ok" : "fail") << "\n";
    }

    if (!args.oracle.empty()) {
        TzQueryArgs query;
        query.oracle = args.oracle;
        query.graph = args.graph;
        query.check_stretch = true;
        query.out = "/dev/null";
        const bool oracle_ok = run_tz_query(query) == 0;
        if (!oracle_ok) status = 1;
        std::cerr << "oracle: " << (oracle_ok ? "ok" : "fail") << "\n";
    }
    return status;
}

// ----- bench ----------------------------------------------------------------

struct BenchArgs {
    std::string suite = "engine";
    std::uint64_t seed = 1;
    unsigned threads = 1;
    bool audit = false;
    bool timings = false;
    std::string out;
    std::vector<std::size_t> n_list;
    std::vector<std::uint32_t> k_list;
    std::vector<int> p_list;
};

BenchRow engine_row(const std::string& adversary, std::size_t universe, std::size_t r,
                    int p, std::uint64_t seed, bool audit, bool timings, bool& failed) {
    SelectOptions options;
    options.record_members = true;

    std::unique_ptr<GrowableBallSystem> system;
    Graph graph;
    if (adversary == "cyclic") {
        system = std::make_unique<CyclicBallSystem>(universe, universe);
    } else if (adversary == "random") {
        system = std::make_unique<RandomBallSystem>(universe, universe, seed);
    } else {
        GeneratorSpec spec;
        spec.family = GeneratorSpec::Family::RandomGnm;
        spec.n = universe;
        spec.m = universe * 2;
        spec.seed = seed;
        graph = generate(spec);
        system = std::make_unique<PartialDijkstraBallSystem>(graph);
    }

    Timer timer;
    CenterSelection sel = select_centers(*system, r, p, options);
    const double elapsed = timer.ms();

    std::vector<std::uint8_t> is_center(universe, 0);
    for (ElementId c : sel.centers) is_center[c] = 1;
    bool all_hit = true;
    for (const auto& ball : sel.members) {
        bool hit = false;
        for (ElementId e : ball)
            if (is_center[e]) {
                hit = true;
                break;
            }
        all_hit = all_hit && hit;
    }

    const double ratio = static_cast<double>(universe) / static_cast<double>(r);
    const double bound = std::pow(2.0, (p + 1) * (p + 1)) *
                         static_cast<double>(sel.ball_count) * std::pow(ratio, p);
    const double measured = evaluate_cost(sel, CostFunction::power(p));

    bool ok = all_hit && sel.centers.size() <= r && cost_bound_holds(sel) &&
              round_accounting(sel).ok();
    if (audit) ok = ok && tracker_ops_audit(sel).ok();
    if (!ok) failed = true;

    std::ostringstream id;
    id << adversary << "-N" << universe << "-r" << r << "-p" << p << "-s" << seed;

    BenchRow row;
    row.command = "bench-engine";
    row.graph_id = id.str();
    row.n = fmt_u64(universe);
    row.m = fmt_u64(sel.ball_count);
    row.k_or_r = fmt_u64(r);
    row.p = fmt_u64(p);
    row.centers_used = fmt_u64(sel.centers.size());
    row.sum_ball_size = fmt_u64(sel.sum_sizes());
    row.sum_xlogx_cost = fmt_double(sel.sum_xlogx());
    row.bound_value = fmt_double(bound);
    row.bound_slack_ratio = fmt_double(measured / bound);
    row.verify_verdict = ok ? "ok" : "fail";
    if (timings) row.elapsed_ms = fmt_double(elapsed);
    row.seed = fmt_u64(seed);
    return row;
}

std::vector<BenchRow> bench_engine_cell(std::size_t universe, std::uint64_t seed,
                                        const std::vector<int>& p_list, bool audit,
                                        bool timings, bool& failed) {
    std::vector<BenchRow> rows;
    const std::size_t r_values[] = {
        static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(universe)))),
        std::max<std::size_t>(1, universe / 8), std::max<std::size_t>(1, universe / 2)};
    for (const char* adversary : {"cyclic", "random", "dijkstra"})
        for (std::size_t r : r_values)
            for (int p : p_list)
                rows.push_back(
                    engine_row(adversary, universe, r, p, seed, audit, timings, failed));
    return rows;
}

std::vector<BenchRow> bench_bundles_cell(std::size_t n, std::uint64_t seed, bool timings,
                                         bool& failed) {
    GeneratorSpec spec;
    spec.family = GeneratorSpec::Family::RandomGnm;
    spec.n = n;
    spec.m = n * 2;
    spec.seed = seed;
    Graph raw = generate(spec);
    DegreeSplitResult transform = make_constant_degree(raw);
    const Graph& g = transform.graph;
    const std::size_t r = choose_r(g.vertex_count(), g.edge_count());

    std::vector<BenchRow> rows;
    auto outcome =
        bundle_row(g, spec_id(spec) + "-split", r, 2, /*verify=*/true, false, timings);
    outcome.row.command = "bench-bundles";
    outcome.row.seed = fmt_u64(seed);
    if (outcome.verify_failed) failed = true;
    rows.push_back(outcome.row);

    for (const char* kind : {"baseline-random", "baseline-folklore"}) {
        Timer timer;
        BaselineStats stats = std::string(kind) == "baseline-random"
                                  ? run_baseline_random(g, r, seed)
                                  : run_baseline_folklore(g, r);
        BenchRow row;
        row.command = kind;
        row.graph_id = spec_id(spec) + "-split";
        row.n = fmt_u64(g.vertex_count());
        row.m = fmt_u64(g.edge_count());
        row.k_or_r = fmt_u64(r);
        row.centers_used = fmt_u64(stats.centers_used);
        row.sum_ball_size = fmt_u64(stats.sum_sizes());
        row.sum_xlogx_cost = fmt_double(stats.sum_xlogx());
        if (timings) row.elapsed_ms = fmt_double(timer.ms());
        row.seed = fmt_u64(seed);
        rows.push_back(row);
    }
    return rows;
}

std::vector<BenchRow> bench_tz_cell(std::size_t n, std::uint32_t k, std::uint64_t seed,
                                    bool timings, bool& failed) {
    GeneratorSpec spec;
    spec.family = GeneratorSpec::Family::RandomGnm;
    spec.n = n;
    spec.m = n * 3;
    spec.seed = seed;
    Graph g = generate(spec);

    Timer timer;
    TzBuild build = build_oracle(g, k);
    const double elapsed = timer.ms();
    const bool ok = tz_stats_ok(build.stats);
    if (!ok) failed = true;

    BenchRow row;
    row.command = "bench-tz";
    row.graph_id = spec_id(spec);
    row.n = fmt_u64(n);
    row.m = fmt_u64(g.edge_count());
    row.k_or_r = fmt_u64(k);
    if (k >= 2) {
        std::uint64_t first_level_centers = 0;
        for (const TzLevelStats& lvl : build.stats.levels)
            if (lvl.level == 0) first_level_centers += lvl.centers;
        row.centers_used = fmt_u64(first_level_centers);
    }
    row.sum_ball_size = fmt_u64(build.stats.stored_pairs);
    row.bound_value = fmt_double(build.stats.size_bound);
    row.bound_slack_ratio =
        fmt_double(static_cast<double>(build.stats.stored_pairs) / build.stats.size_bound);
    row.verify_verdict = ok ? "ok" : "fail";
    if (timings) row.elapsed_ms = fmt_double(elapsed);
    row.seed = fmt_u64(seed);
    return {row};
}

int run_bench(const BenchArgs& args) {
    std::vector<std::function<std::vector<BenchRow>(bool&)>> cells;

    if (args.suite == "engine") {
        auto n_list = args.n_list.empty() ? std::vector<std::size_t>{64, 256, 1024}
                                          : args.n_list;
        auto p_list = args.p_list.empty() ? std::vector<int>{1, 2, 3} : args.p_list;
        for (std::size_t n : n_list)
            cells.push_back([=](bool& failed) {
                return bench_engine_cell(n, args.seed, p_list, args.audit, args.timings,
                                         failed);
            });
    } else if (args.suite == "bundles") {
        auto n_list = args.n_list.empty() ? std::vector<std::size_t>{64, 128, 256}
                                          : args.n_list;
        for (std::size_t n : n_list)
            cells.push_back([=](bool& failed) {
                return bench_bundles_cell(n, args.seed, args.timings, failed);
            });
    } else if (args.suite == "tz") {
        auto n_list = args.n_list.empty() ? std::vector<std::size_t>{32, 64, 128}
                                          : args.n_list;
        auto k_list = args.k_list.empty() ? std::vector<std::uint32_t>{1, 2, 3}
                                          : args.k_list;
        for (std::size_t n : n_list)
            for (std::uint32_t k : k_list)
                cells.push_back([=](bool& failed) {
                    return bench_tz_cell(n, k, args.seed, args.timings, failed);
                });
    } else {
        throw ParameterError("unknown suite '" + args.suite + "' (engine, bundles, tz)");
    }

    std::vector<std::vector<BenchRow>> results(cells.size());
    std::atomic<bool> failed{false};
    const unsigned workers = std::max(1u, args.threads);
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next.fetch_add(1); i < cells.size(); i = next.fetch_add(1)) {
            bool cell_failed = false;
            results[i] = cells[i](cell_failed);
            if (cell_failed) failed = true;
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    std::ostringstream out;
    out << csv_header() << '\n';
    for (const auto& rows : results)
        for (const BenchRow& row : rows) out << csv_line(row) << '\n';
    write_output(out.str(), args.out);
    return failed ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"deterministic center selection, bundle construction and "
                 "distance oracles for undirected graphs"};
    app.require_subcommand(1);

    GenArgs gen;
    auto* gen_cmd = app.add_subcommand("gen", "generate a graph file");
    gen_cmd->add_option("--family", gen.family,
                        "path, cycle, grid, random-gnm, random-geometric");
    gen_cmd->add_option("--n", gen.n, "vertex count")->required();
    gen_cmd->add_option("--m", gen.m, "edge count (random families)");
    gen_cmd->add_option("--wmin", gen.wmin, "minimum edge weight");
    gen_cmd->add_option("--wmax", gen.wmax, "maximum edge weight");
    gen_cmd->add_option("--seed", gen.seed, "generator seed");
    gen_cmd->add_option("--out", gen.out, "output file (default stdout)");

    BundleArgs bundles;
    auto* bundles_cmd = app.add_subcommand(
        "sssp-bundles", "deterministic bundle construction (graph is degree-capped first)");
    bundles_cmd->add_option("--graph", bundles.graph, "edge-list file")->required();
    bundles_cmd->add_option("--r", bundles.r, "center budget (default: m*sqrt(loglog n/log n))");
    bundles_cmd->add_option("--p", bundles.p, "engine cost exponent");
    bundles_cmd->add_flag("--verify", bundles.verify, "brute-force re-check, exit 1 on failure");
    bundles_cmd->add_flag("--audit", bundles.audit, "include tracker operation-count audit");
    bundles_cmd->add_flag("--timings", bundles.timings, "fill the elapsed_ms column");
    bundles_cmd->add_option("--dump-bundles", bundles.dump, "write the per-vertex ball dump");
    bundles_cmd->add_option("--out", bundles.out, "CSV output file (default stdout)");

    TzBuildArgs tz_build;
    auto* tzb_cmd = app.add_subcommand("tz-build", "build a distance oracle snapshot");
    tzb_cmd->add_option("--graph", tz_build.graph, "edge-list file")->required();
    tzb_cmd->add_option("--k", tz_build.k, "level count (stretch 2k-1)")->required();
    tzb_cmd->add_option("--out", tz_build.snapshot, "snapshot output file");
    tzb_cmd->add_option("--csv", tz_build.csv, "CSV output file (default stdout)");
    tzb_cmd->add_flag("--verify", tz_build.verify, "check size and budget bounds");
    tzb_cmd->add_flag("--timings", tz_build.timings, "fill the elapsed_ms column");

    TzQueryArgs tz_query;
    auto* tzq_cmd = app.add_subcommand("tz-query", "answer distance queries from a snapshot");
    tzq_cmd->add_option("--oracle", tz_query.oracle, "snapshot file")->required();
    tzq_cmd->add_option("--pairs", tz_query.pairs, "'all' or a file of 'u v' lines");
    tzq_cmd->add_option("--graph", tz_query.graph, "edge-list file (for --check-stretch)");
    tzq_cmd->add_flag("--check-stretch", tz_query.check_stretch,
                      "compare each estimate against exact distances");
    tzq_cmd->add_option("--out", tz_query.out, "output file (default stdout)");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "re-check dumped artifacts");
    verify_cmd->add_option("--graph", verify.graph, "edge-list file")->required();
    verify_cmd->add_option("--bundles", verify.bundles, "bundle dump to verify");
    verify_cmd->add_option("--oracle", verify.oracle, "oracle snapshot to stretch-check");

    BenchArgs bench;
    auto* bench_cmd = app.add_subcommand("bench", "parameter sweeps with CSV output");
    bench_cmd->add_option("--suite", bench.suite, "engine, bundles, tz");
    bench_cmd->add_option("--seed", bench.seed, "base seed");
    bench_cmd->add_option("--threads", bench.threads, "parallel cells (default 1)");
    bench_cmd->add_option("--n-list", bench.n_list, "instance sizes")->delimiter(',');
    bench_cmd->add_option("--k-list", bench.k_list, "oracle level counts (tz suite)")
        ->delimiter(',');
    bench_cmd->add_option("--p-list", bench.p_list, "cost exponents (engine suite)")
        ->delimiter(',');
    bench_cmd->add_flag("--audit", bench.audit, "include operation-count audits");
    bench_cmd->add_flag("--timings", bench.timings, "fill the elapsed_ms column");
    bench_cmd->add_option("--out", bench.out, "CSV output file (default stdout)");

    try {
        app.parse(argc, argv);
        if (*gen_cmd) return run_gen(gen);
        if (*bundles_cmd) return run_bundles(bundles);
        if (*tzb_cmd) return run_tz_build(tz_build);
        if (*tzq_cmd) return run_tz_query(tz_query);
        if (*verify_cmd) return run_verify(verify);
        if (*bench_cmd) return run_bench(bench);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const ContractError& e) {
        std::cerr << "internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
