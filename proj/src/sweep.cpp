// Conjecture sweeps: classify a batch of graphs, flag scope violations, and
// serialize the result as CSV/JSON. Batch workers each claim whole graphs;
// the per-graph solves stay single-threaded so every field of a row is a
// deterministic function of the graph alone.

#include "royal/sweep.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include <json.hpp>

#include "royal/graph6.hpp"
#include "royal/trees.hpp"

namespace royal {

namespace {

using Clock = std::chrono::steady_clock;

bool violates(ConjectureScope scope, Verdict v) {
    if (scope == ConjectureScope::TreesRoyalZero) return v != Verdict::RoyalZero;
    return v == Verdict::Anomaly;
}

SweepRow classify_row(const Graph& g, ConjectureScope scope, const SweepOptions& opts) {
    SweepRow row;
    row.graph6 = encode_graph6(g);
    row.n = g.order();
    row.m = g.size();
    row.k_floor = k_floor(g.order());

    SolveOptions solve_opts;
    solve_opts.workers = 1;
    solve_opts.timeout_ms = opts.timeout_ms;

    auto t0 = Clock::now();
    try {
        Classification result = classify(g, solve_opts);
        row.index = result.index;
        row.verdict = result.verdict;
        row.method = result.method;
        row.nodes = result.stats.nodes;
        row.counterexample = violates(scope, result.verdict);
    } catch (const SolveTimeout& t) {
        row.timed_out = true;
        row.nodes = t.stats.nodes;
    }
    if (!opts.deterministic)
        row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
    return row;
}

}  // namespace

std::string scope_name(ConjectureScope s) {
    return s == ConjectureScope::TreesRoyalZero ? "trees-royal-zero" : "no-anomaly";
}

SweepReport sweep_graphs(const std::vector<Graph>& graphs, ConjectureScope scope,
                         const SweepOptions& opts, const std::string& description) {
    SweepReport report;
    report.description = description;
    report.scope = scope;
    report.rows.resize(graphs.size());

    int workers = std::max(1, opts.workers);
    if (workers == 1) {
        for (std::size_t i = 0; i < graphs.size(); ++i)
            report.rows[i] = classify_row(graphs[i], scope, opts);
    } else {
        std::atomic<std::size_t> next{0};
        auto drain = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= graphs.size()) return;
                report.rows[i] = classify_row(graphs[i], scope, opts);
            }
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(drain);
        for (auto& t : pool) t.join();
    }

    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        if (report.rows[i].counterexample) report.counterexamples.push_back(i);
        if (report.rows[i].timed_out) ++report.timed_out;
    }
    return report;
}

SweepReport sweep_trees(int min_order, int max_order, const SweepOptions& opts) {
    if (min_order < 3 || max_order < min_order)
        throw std::invalid_argument("tree sweep needs 3 <= min_order <= max_order");
    std::vector<Graph> trees;
    for (int n = min_order; n <= max_order; ++n)
        for_each_free_tree(n, [&](const Graph& t) { trees.push_back(t); });
    return sweep_graphs(trees, ConjectureScope::TreesRoyalZero, opts,
                        "free trees of order " + std::to_string(min_order) + ".." +
                            std::to_string(max_order));
}

std::string sweep_to_csv(const SweepReport& report) {
    std::string out = "graph6,n,m,k_floor,index,verdict,method,nodes,ms\n";
    for (const SweepRow& r : report.rows) {
        out += r.graph6;
        out += ',';
        out += std::to_string(r.n) + ',' + std::to_string(r.m) + ',' +
               std::to_string(r.k_floor) + ',' + std::to_string(r.index) + ',';
        out += r.timed_out ? "timeout" : verdict_name(r.verdict);
        out += ',';
        out += r.timed_out ? "none" : method_name(r.method);
        out += ',' + std::to_string(r.nodes) + ',' + std::to_string(r.ms) + '\n';
    }
    return out;
}

std::string sweep_to_json(const SweepReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const SweepRow& r : report.rows) {
        nlohmann::json row{
            {"graph6", r.graph6}, {"n", r.n},
            {"m", r.m},           {"k_floor", r.k_floor},
            {"index", r.index},   {"verdict", r.timed_out ? "timeout" : verdict_name(r.verdict)},
            {"nodes", r.nodes},   {"ms", r.ms},
        };
        if (!r.timed_out) row["method"] = method_name(r.method);
        if (r.counterexample) row["counterexample"] = true;
        rows.push_back(std::move(row));
    }
    nlohmann::json doc{
        {"description", report.description},
        {"scope", scope_name(report.scope)},
        {"rows", std::move(rows)},
        {"counterexamples", report.counterexamples},
        {"timed_out", report.timed_out},
    };
    return doc.dump(2) + "\n";
}

}  // namespace royal
