// Command-line front end: solve or verify single instances, emit the
// constructive colorings, sweep graph batches for conjecture counterexamples,
// and recompute the full fixture table.
//
// Exit codes, never conflated:
//   0  success
//   1  input error (bad graph6, bad flags, schema violations, preconditions)
//   2  timeout / incomplete results
//   3  counterexample or fixture mismatch found

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "royal/certificate_io.hpp"
#include "royal/coloring.hpp"
#include "royal/constructions.hpp"
#include "royal/generators.hpp"
#include "royal/graph6.hpp"
#include "royal/reproduce.hpp"
#include "royal/solver.hpp"
#include "royal/sweep.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kTimeout = 2;
constexpr int kCounterexample = 3;

using royal::Graph;

std::int64_t default_timeout_ms() {
    if (const char* env = std::getenv("ROYAL_TIMEOUT_MS")) {
        try {
            return std::stoll(env);
        } catch (const std::exception&) {
            throw std::invalid_argument("ROYAL_TIMEOUT_MS is not an integer: " +
                                        std::string(env));
        }
    }
    return 300000;
}

struct CommonFlags {
    int workers = 1;
    std::int64_t timeout_ms = 0;  // resolved at parse time from the env default
    bool deterministic = false;

    royal::SolveOptions solve_options() const {
        royal::SolveOptions opts;
        opts.workers = deterministic ? 1 : workers;
        opts.timeout_ms = timeout_ms;
        return opts;
    }
};

void add_common_flags(CLI::App* cmd, CommonFlags& flags) {
    flags.timeout_ms = default_timeout_ms();
    cmd->add_option("--workers", flags.workers, "parallel workers (default 1)")
        ->check(CLI::Range(1, 256));
    cmd->add_option("--timeout-ms", flags.timeout_ms,
                    "per-level time budget in ms, <= 0 for none (default "
                    "ROYAL_TIMEOUT_MS or 300000)");
    cmd->add_flag("--deterministic", flags.deterministic,
                  "single worker and ms reported as 0, for byte-stable output");
}

// One positional: a graph6 line. Two: generator family + parameter.
Graph graph_from_args(const std::vector<std::string>& args) {
    if (args.size() == 1) return royal::parse_graph6(args[0]);
    if (args.size() == 2) {
        auto family = royal::parse_family(args[0]);
        if (!family)
            throw std::invalid_argument("unknown graph family \"" + args[0] +
                                        "\" (path, cycle, complete, star, hypercube, gk, "
                                        "cubic_caterpillar)");
        int parameter = 0;
        try {
            parameter = std::stoi(args[1]);
        } catch (const std::exception&) {
            throw std::invalid_argument("family parameter is not an integer: " + args[1]);
        }
        return royal::generate({*family, parameter});
    }
    throw std::invalid_argument("expected one graph6 line or a family name plus parameter");
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output file " + path);
    out << text;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::int64_t elapsed_or_zero(std::chrono::steady_clock::time_point t0, bool deterministic) {
    if (deterministic) return 0;
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

// ---------------------------------------------------------------- solve ----

int run_solve(const std::vector<std::string>& graph_args, const CommonFlags& flags,
              const std::string& mode, const std::string& out_path,
              const std::string& dot_path) {
    Graph g = graph_from_args(graph_args);
    royal::SolveOptions opts = flags.solve_options();

    nlohmann::json doc;
    royal::EdgeColoring certificate;
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (mode == "royal") {
            royal::SolveResult r = royal::royal_index(g, opts);
            certificate = r.certificate;
            doc = nlohmann::json::parse(royal::certificate_to_json(g, r.certificate));
            doc["mode"] = "royal";
            doc["index"] = r.index;
            doc["nodes"] = r.stats.nodes;
        } else {
            royal::Classification r = royal::classify(g, opts);
            if (r.certificate) {
                certificate = *r.certificate;
            } else {
                // a shortcut settled the index without a coloring; search one
                // at the settled width so the output is always a certificate
                royal::LevelResult level =
                    royal::search_level(g, r.index, royal::SearchMode::StrongRoyal, opts);
                if (level.status != royal::LevelStatus::Found)
                    throw royal::SolveTimeout(r.index, r.index, level.stats);
                certificate = level.certificate;
                r.stats.nodes += level.stats.nodes;
            }
            doc = nlohmann::json::parse(royal::certificate_to_json(g, certificate));
            doc["mode"] = "strong";
            doc["index"] = r.index;
            doc["verdict"] = royal::verdict_name(r.verdict);
            doc["method"] = royal::method_name(r.method);
            doc["nodes"] = r.stats.nodes;
        }
    } catch (const royal::SolveTimeout& t) {
        nlohmann::json partial{
            {"timeout", true},
            {"index_lower_bound", t.lower_bound},
            {"index_upper_bound", t.upper_bound},
            {"nodes", t.stats.nodes},
            {"ms", elapsed_or_zero(t0, flags.deterministic)},
        };
        write_output(partial.dump(2) + "\n", out_path);
        return kTimeout;
    }
    doc["ms"] = elapsed_or_zero(t0, flags.deterministic);
    write_output(doc.dump(2) + "\n", out_path);
    if (!dot_path.empty()) write_output(royal::certificate_to_dot(g, certificate), dot_path);
    return kOk;
}

// --------------------------------------------------------------- verify ----

int run_verify(const std::string& cert_path, const std::vector<std::string>& graph_args,
               const std::string& mode) {
    royal::ParsedCertificate parsed = royal::certificate_from_json(read_file(cert_path));

    if (!graph_args.empty()) {
        Graph claimed = graph_from_args(graph_args);
        if (!(claimed == parsed.graph))
            throw std::invalid_argument(
                "certificate graph does not match the given graph (order " +
                std::to_string(parsed.graph.order()) + " vs " +
                std::to_string(claimed.order()) + ", size " +
                std::to_string(parsed.graph.size()) + " vs " + std::to_string(claimed.size()) +
                ")");
    }

    std::vector<royal::Violation> violations =
        mode == "royal" ? royal::verify_royal(parsed.graph, parsed.coloring)
                        : royal::verify_strong_royal(parsed.graph, parsed.coloring);
    if (violations.empty()) {
        std::cout << "valid " << mode << " coloring, width "
                  << royal::palette_width(parsed.coloring) << ", order "
                  << parsed.graph.order() << ", size " << parsed.graph.size() << "\n";
        return kOk;
    }
    std::cout << violations.size() << " violation(s):\n";
    for (const auto& v : violations) std::cout << "  " << royal::describe(v) << "\n";
    return kInputError;
}

// ------------------------------------------------------------ construct ----

int run_construct(const std::string& family, const std::string& parameter,
                  const std::string& out_path, const std::string& dot_path) {
    Graph g(3, {});
    royal::EdgeColoring c;

    auto int_param = [&] {
        try {
            return std::stoi(parameter);
        } catch (const std::exception&) {
            throw std::invalid_argument("parameter is not an integer: " + parameter);
        }
    };

    if (family == "cycle") {
        int n = int_param();
        g = royal::cycle_graph(n);
        c = royal::construct_cycle(n);
    } else if (family == "caterpillar") {
        int s = int_param();
        g = royal::cubic_caterpillar_graph(s);
        c = royal::construct_cubic_caterpillar(s);
    } else if (family == "corona-complete") {
        auto built = royal::corona_complete(int_param());
        g = std::move(built.first);
        c = std::move(built.second);
    } else if (family == "gk") {
        royal::GkGraph gk = royal::gk_build(int_param());
        g = std::move(gk.graph);
        c = std::move(gk.certificate);
    } else if (family == "path") {
        int r = int_param();
        g = royal::path_graph(r);
        c = royal::path_certificate(r);
    } else if (family == "corona-lift" || family == "cartesian-lift") {
        royal::ParsedCertificate base = royal::certificate_from_json(read_file(parameter));
        auto lifted = family == "corona-lift"
                          ? royal::lift_corona(base.graph, base.coloring)
                          : royal::lift_cartesian_k2(base.graph, base.coloring);
        g = std::move(lifted.first);
        c = std::move(lifted.second);
    } else {
        throw std::invalid_argument("unknown construction \"" + family +
                                    "\" (cycle, path, caterpillar, corona-complete, gk, "
                                    "corona-lift, cartesian-lift)");
    }

    write_output(royal::certificate_to_json(g, c) + "\n", out_path);
    if (!dot_path.empty()) write_output(royal::certificate_to_dot(g, c), dot_path);
    return kOk;
}

// ---------------------------------------------------------------- sweep ----

std::vector<Graph> read_graph6_lines(const std::string& path, int require_order) {
    std::vector<Graph> graphs;
    std::string text = read_file(path);
    std::istringstream lines(text);
    std::string line;
    int line_no = 0;
    while (std::getline(lines, line)) {
        ++line_no;
        if (line.empty()) continue;
        Graph g = [&] {
            try {
                return royal::parse_graph6(line);
            } catch (const royal::Graph6Error& e) {
                throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
            }
        }();
        if (require_order > 0 && g.order() != require_order)
            throw std::invalid_argument("line " + std::to_string(line_no) + ": expected order " +
                                        std::to_string(require_order) + ", got " +
                                        std::to_string(g.order()));
        graphs.push_back(std::move(g));
    }
    if (graphs.empty()) throw std::invalid_argument("no graphs in " + path);
    return graphs;
}

int run_sweep(const std::vector<std::string>& source, const CommonFlags& flags,
              const std::string& csv_path, const std::string& json_path) {
    royal::SweepOptions opts;
    opts.workers = flags.deterministic ? 1 : flags.workers;
    opts.timeout_ms = flags.timeout_ms;
    opts.deterministic = flags.deterministic;

    royal::SweepReport report;
    if (source.size() >= 2 && source[0] == "trees") {
        int nmin = std::stoi(source[1]);
        int nmax = source.size() >= 3 ? std::stoi(source[2]) : nmin;
        report = royal::sweep_trees(nmin, nmax, opts);
    } else if (source.size() == 2 && source[0] == "file") {
        report = royal::sweep_graphs(read_graph6_lines(source[1], 0),
                                     royal::ConjectureScope::NoAnomaly, opts,
                                     "graph6 batch from " + source[1]);
    } else if (source.size() == 3 && source[0] == "connected") {
        int n = std::stoi(source[1]);
        report = royal::sweep_graphs(read_graph6_lines(source[2], n),
                                     royal::ConjectureScope::NoAnomaly, opts,
                                     "connected graphs of order " + source[1]);
    } else {
        throw std::invalid_argument(
            "sweep source must be: trees <nmin> [nmax] | file <path> | connected <n> <path>");
    }

    write_output(royal::sweep_to_csv(report), csv_path);
    if (!json_path.empty()) write_output(royal::sweep_to_json(report), json_path);

    std::cerr << report.rows.size() << " graphs, " << report.counterexamples.size()
              << " counterexample(s), " << report.timed_out << " timeout(s)\n";
    for (std::size_t i : report.counterexamples)
        std::cerr << "counterexample: " << report.rows[i].graph6 << " classified "
                  << royal::verdict_name(report.rows[i].verdict) << "\n";

    if (!report.counterexamples.empty()) return kCounterexample;
    if (report.timed_out > 0) return kTimeout;
    return kOk;
}

// ------------------------------------------------------------ reproduce ----

int run_reproduce_cmd(const std::string& set_name, const CommonFlags& flags) {
    royal::ReproduceReport report = royal::run_reproduce(set_name, flags.solve_options());
    std::cout << royal::reproduce_to_text(report);
    if (report.all_pass()) return kOk;
    for (const auto& row : report.rows)
        if (!row.pass && row.computed == "timeout") return kTimeout;
    return kCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solver, constructions, and conjecture sweeps for royal and strong "
                 "royal edge colorings"};
    app.require_subcommand(1);

    // solve
    std::vector<std::string> solve_graph;
    CommonFlags solve_flags;
    std::string solve_mode = "strong", solve_out, solve_dot;
    CLI::App* solve = app.add_subcommand(
        "solve", "compute the index of a graph (graph6 line, or family + parameter)");
    solve->add_option("graph", solve_graph, "graph6 line, or family name and parameter")
        ->expected(1, 2);
    solve->add_option("--mode", solve_mode, "strong (default) or royal")
        ->check(CLI::IsMember({"strong", "royal"}));
    solve->add_option("-o,--output", solve_out, "write JSON here instead of stdout");
    solve->add_option("--dot", solve_dot, "also write a DOT rendering to this file");
    add_common_flags(solve, solve_flags);

    // verify
    std::string verify_cert, verify_mode = "strong";
    std::vector<std::string> verify_graph;
    CLI::App* verify = app.add_subcommand("verify", "check a certificate JSON file");
    verify->add_option("certificate", verify_cert, "certificate JSON file, or - for stdin")
        ->required();
    verify->add_option("graph", verify_graph,
                       "optional graph to cross-check (graph6, or family + parameter)")
        ->expected(0, 2);
    verify->add_option("--mode", verify_mode, "strong (default) or royal")
        ->check(CLI::IsMember({"strong", "royal"}));

    // construct
    std::string construct_family, construct_param, construct_out, construct_dot;
    CLI::App* construct = app.add_subcommand("construct", "emit a constructive coloring");
    construct
        ->add_option("family", construct_family,
                     "cycle, path, caterpillar, corona-complete, gk, corona-lift, "
                     "cartesian-lift")
        ->required();
    construct
        ->add_option("parameter", construct_param,
                     "size parameter, or base certificate file for the lifts")
        ->required();
    construct->add_option("-o,--output", construct_out, "write JSON here instead of stdout");
    construct->add_option("--dot", construct_dot, "also write a DOT rendering to this file");

    // sweep
    std::vector<std::string> sweep_source;
    CommonFlags sweep_flags;
    std::string sweep_csv, sweep_json;
    CLI::App* sweep = app.add_subcommand(
        "sweep", "classify a batch of graphs and flag conjecture counterexamples");
    sweep
        ->add_option("source", sweep_source,
                     "trees <nmin> [nmax] | file <path> | connected <n> <path>")
        ->expected(2, 3);
    sweep->add_option("--csv", sweep_csv, "write CSV here instead of stdout");
    sweep->add_option("--json", sweep_json, "also write a JSON report to this file");
    add_common_flags(sweep, sweep_flags);

    // reproduce
    std::string reproduce_set = "all";
    CommonFlags reproduce_flags;
    CLI::App* reproduce =
        app.add_subcommand("reproduce", "recompute the pinned fixture table");
    reproduce->add_option("set", reproduce_set,
                          "cycles, complete, products, coronas, gk, chords, all (default)");
    add_common_flags(reproduce, reproduce_flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (solve->parsed()) return run_solve(solve_graph, solve_flags, solve_mode, solve_out,
                                              solve_dot);
        if (verify->parsed()) return run_verify(verify_cert, verify_graph, verify_mode);
        if (construct->parsed())
            return run_construct(construct_family, construct_param, construct_out,
                                 construct_dot);
        if (sweep->parsed()) return run_sweep(sweep_source, sweep_flags, sweep_csv, sweep_json);
        if (reproduce->parsed()) return run_reproduce_cmd(reproduce_set, reproduce_flags);
    } catch (const royal::Graph6Error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const royal::SolveTimeout& e) {
        std::cerr << "timeout: " << e.what() << "\n";
        return kTimeout;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
