// Gate suite: recomputes every pinned fixture value end to end, one line per
// criterion, nonzero exit if any line fails. Wall-clock budgets are part of
// each criterion's pass condition, so a regression in the solver's pruning
// shows up here even when the values stay right.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "royal/coloring.hpp"
#include "royal/constructions.hpp"
#include "royal/generators.hpp"
#include "royal/graph6.hpp"
#include "royal/solver.hpp"
#include "royal/sweep.hpp"
#include "royal/trees.hpp"

using namespace royal;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void expect(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            if (!detail.empty()) detail += "; ";
            detail += what;
        }
    }
};

int hardware_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::clamp(hw, 1u, 8u));
}

std::vector<Graph> connected_labeled_graphs(int n) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::vector<Graph> out;
    for (unsigned mask = 0; mask < (1u << all.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t e = 0; e < all.size(); ++e)
            if (mask >> e & 1u) edges.push_back(all[e]);
        Graph g(n, std::move(edges));
        if (is_connected(g)) out.push_back(std::move(g));
    }
    return out;
}

// --- criterion bodies ------------------------------------------------------

Outcome cycle_solver_table() {
    Outcome o;
    SolveOptions opts;
    opts.workers = 1;
    const int expected[] = {3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4};
    for (int n = 3; n <= 15; ++n) {
        int got = strong_royal_index(cycle_graph(n), opts).index;
        o.expect(got == expected[n - 3], "C_" + std::to_string(n) + " gave " +
                                             std::to_string(got) + ", expected " +
                                             std::to_string(expected[n - 3]));
    }
    return o;
}

Outcome cycle_constructions() {
    Outcome o;
    for (int n = 7; n <= 63; ++n) {
        EdgeColoring c = construct_cycle(n);
        int want = n == 7 ? 4 : k_floor(n);
        o.expect(verify_strong_royal(cycle_graph(n), c).empty(),
                 "C_" + std::to_string(n) + " certificate invalid");
        o.expect(palette_width(c) == want, "C_" + std::to_string(n) + " width " +
                                               std::to_string(palette_width(c)) + ", expected " +
                                               std::to_string(want));
    }
    return o;
}

Outcome complete_graph_table() {
    Outcome o;
    const int expected[] = {3, 4, 4, 4, 4};
    for (int n = 4; n <= 8; ++n) {
        int got = strong_royal_index(complete_graph(n)).index;
        o.expect(got == expected[n - 4], "K_" + std::to_string(n) + " gave " +
                                             std::to_string(got) + ", expected " +
                                             std::to_string(expected[n - 4]));
    }
    return o;
}

Outcome chord_drop() {
    Outcome o;
    Graph c7 = cycle_graph(7);
    int checked = 0;
    for (int u = 0; u < 7; ++u) {
        for (int v = u + 1; v < 7; ++v) {
            if (c7.has_edge(u, v)) continue;
            auto edges = c7.edges();
            edges.emplace_back(u, v);
            int got = strong_royal_index(Graph(7, std::move(edges))).index;
            o.expect(got == 3, "C_7 + chord " + std::to_string(u) + "-" + std::to_string(v) +
                                   " gave " + std::to_string(got));
            ++checked;
        }
    }
    o.expect(checked == 14, "expected 14 chords, saw " + std::to_string(checked));
    return o;
}

Outcome host_graph_formulas() {
    Outcome o;
    for (int k = 2; k <= 8; ++k) {
        GkGraph gk = gk_build(k);
        o.expect(gk.graph.size() == gk_size(k),
                 "size mismatch at k=" + std::to_string(k));
        for (int v = 0; v < gk.graph.order(); ++v)
            if (gk.graph.degree(v) != gk_degree(k, gk.labels.colors[v].count())) {
                o.expect(false, "degree mismatch at k=" + std::to_string(k) + " v=" +
                                    std::to_string(v));
                break;
            }
    }
    o.expect(gk_size(3) == 15, "m_3 is " + std::to_string(gk_size(3)) + ", expected 15");
    return o;
}

Outcome products() {
    Outcome o;
    SolveOptions opts;
    opts.workers = 1;

    const int expected[] = {4, 4, 5};
    for (int n = 5; n <= 7; ++n) {
        int got = strong_royal_index(cartesian_k2(complete_graph(n)), opts).index;
        o.expect(got == expected[n - 5], "K_" + std::to_string(n) + " prism gave " +
                                             std::to_string(got) + ", expected " +
                                             std::to_string(expected[n - 5]));
    }

    // the k=4 level for the K_7 prism must be an exhaustive refutation
    LevelResult level = exists_strong_royal(cartesian_k2(complete_graph(7)), 4, opts);
    o.expect(level.status == LevelStatus::Refuted, "K_7 prism k=4 level not refuted");

    // the pinned width-4 reference labeling of the K_6 prism
    Graph g = cartesian_k2(complete_graph(6));
    VertexColoring labels;
    labels.palette_k = 4;
    auto L = [](std::initializer_list<int> cs) { return ColorSet::from_list(cs); };
    labels.colors = {L({1, 4}),    L({1}),    L({1, 2, 4}), L({1, 2, 3}),
                     L({1, 3}),    L({1, 2}), L({4}),       L({1, 3, 4}),
                     L({1, 2, 3, 4}),         L({2, 4}),    L({3, 4}),
                     L({2, 3, 4})};
    EdgeColoring c = intersection_coloring(g, labels);
    o.expect(verify_strong_royal(g, c).empty(), "reference prism labeling invalid");
    o.expect(palette_width(c) == 4, "reference prism labeling has wrong width");
    return o;
}

Outcome coronas_and_lifts() {
    Outcome o;

    Classification cor_c7 = classify(corona(cycle_graph(7)));
    o.expect(cor_c7.verdict == Verdict::RoyalZero, "corona of C_7 not royal-zero");
    o.expect(cor_c7.index == 4, "corona of C_7 index " + std::to_string(cor_c7.index));
    o.expect(cor_c7.certificate.has_value() &&
                 verify_strong_royal(corona(cycle_graph(7)), *cor_c7.certificate).empty(),
             "corona of C_7 certificate missing or invalid");

    // both lifts, applied to every pinned royal-zero graph of order <= 8
    std::vector<std::pair<std::string, Graph>> fixtures;
    for (int n : {4, 5, 6, 8}) fixtures.emplace_back("C_" + std::to_string(n), cycle_graph(n));
    for (int n = 3; n <= 8; ++n) fixtures.emplace_back("P_" + std::to_string(n), path_graph(n));
    for (int n : {4, 8}) fixtures.emplace_back("K_" + std::to_string(n), complete_graph(n));
    for (int n = 4; n <= 8; ++n)
        fixtures.emplace_back("star_" + std::to_string(n), star_graph(n));
    for (int k : {2, 3}) fixtures.emplace_back("Q_" + std::to_string(k), hypercube_graph(k));
    fixtures.emplace_back("G_2", gk_graph(2));
    fixtures.emplace_back("G_3", gk_graph(3));
    for (int s : {4, 5}) {
        fixtures.emplace_back("caterpillar_" + std::to_string(s), cubic_caterpillar_graph(s));
    }
    for (auto& [name, g] : fixtures) {
        Classification base = classify(g);
        o.expect(base.verdict == Verdict::RoyalZero, name + " is not royal-zero");
        if (base.verdict != Verdict::RoyalZero || !base.certificate) continue;
        auto [cg, cc] = lift_corona(g, *base.certificate);
        o.expect(verify_strong_royal(cg, cc).empty(), "corona lift of " + name + " invalid");
        auto [pg, pc] = lift_cartesian_k2(g, *base.certificate);
        o.expect(verify_strong_royal(pg, pc).empty(), "prism lift of " + name + " invalid");
    }

    for (int k = 2; k <= 5; ++k) {
        Classification q = classify(hypercube_graph(k));
        o.expect(q.verdict == Verdict::RoyalZero,
                 "Q_" + std::to_string(k) + " classified " + verdict_name(q.verdict));
    }
    return o;
}

Outcome tree_conjecture_sweep() {
    Outcome o;
    SweepOptions opts;
    opts.workers = hardware_workers();
    SweepReport report = sweep_trees(3, 10, opts);
    o.expect(report.rows.size() == 199,
             "expected 199 trees, swept " + std::to_string(report.rows.size()));
    o.expect(report.counterexamples.empty(),
             std::to_string(report.counterexamples.size()) + " counterexample(s)");
    o.expect(report.timed_out == 0, std::to_string(report.timed_out) + " timeout(s)");
    for (const SweepRow& r : report.rows)
        if (r.verdict != Verdict::RoyalZero) {
            o.expect(false, "tree " + r.graph6 + " classified " + verdict_name(r.verdict));
            break;
        }
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::vector<Graph> graphs;
    for (int n : {3, 4})
        for (Graph& g : connected_labeled_graphs(n)) graphs.push_back(std::move(g));
    for (int n = 3; n <= 7; ++n)
        for (const Graph& t : all_free_trees(n)) graphs.push_back(t);
    o.expect(graphs.size() == 4 + 38 + 1 + 2 + 3 + 6 + 11,
             "unexpected corpus size " + std::to_string(graphs.size()));

    int compared = 0;
    for (const Graph& g : graphs) {
        for (int k : {2, 3}) {
            bool search_strong = search_level(g, k, SearchMode::StrongRoyal).status ==
                                 LevelStatus::Found;
            bool brute_strong = brute_force_exists(g, k, true);
            o.expect(search_strong == brute_strong,
                     "strong disagreement at " + encode_graph6(g) + " k=" + std::to_string(k));
            bool search_royal =
                search_level(g, k, SearchMode::Royal).status == LevelStatus::Found;
            bool brute_royal = brute_force_exists(g, k, false);
            o.expect(search_royal == brute_royal,
                     "royal disagreement at " + encode_graph6(g) + " k=" + std::to_string(k));
            compared += 2;
        }
    }
    o.expect(compared == 65 * 4, "expected 260 comparisons, made " + std::to_string(compared));
    return o;
}

Outcome size_threshold() {
    Outcome o;

    // sample dense order-7 graphs: K_7 minus up to five edges, written to a
    // graph6 file and read back, so the parser sits on the tested path
    Graph k7 = complete_graph(7);
    const auto& all = k7.edges();  // 21 edges
    std::vector<std::string> lines;
    auto add_minus = [&](const std::vector<int>& drop) {
        std::vector<std::pair<int, int>> edges;
        for (int e = 0; e < k7.size(); ++e)
            if (std::find(drop.begin(), drop.end(), e) == drop.end())
                edges.push_back(all[e]);
        lines.push_back(encode_graph6(Graph(7, std::move(edges))));
    };
    add_minus({});
    for (int a = 0; a < 21; ++a) add_minus({a});                       // 21 of size 20
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 7; ++b) add_minus({a, b});             // 21 of size 19
    for (int a = 0; a < 10; ++a) add_minus({a, a + 7, a + 14});        // 10 of size 18
    for (int a = 0; a < 4; ++a) add_minus({a, a + 5, a + 10, a + 15, a + 16});  // size 16
    o.expect(lines.size() >= 50, "only " + std::to_string(lines.size()) + " samples");

    const char* path = "order7_dense.g6";
    {
        std::ofstream out(path);
        for (const auto& line : lines) out << line << "\n";
    }
    std::vector<Graph> graphs;
    {
        std::ifstream in(path);
        std::string line;
        while (std::getline(in, line))
            if (!line.empty()) graphs.push_back(parse_graph6(line));
    }
    o.expect(graphs.size() == lines.size(), "file round-trip lost graphs");

    SweepOptions opts;
    opts.workers = hardware_workers();
    SweepReport report = sweep_graphs(graphs, ConjectureScope::NoAnomaly, opts,
                                      "connected order-7 graphs of size >= 16");
    for (const SweepRow& r : report.rows) {
        o.expect(r.m >= 16, r.graph6 + " has size " + std::to_string(r.m));
        if (r.verdict != Verdict::RoyalOne || r.timed_out) {
            o.expect(false, r.graph6 + " classified " +
                                (r.timed_out ? std::string("timeout") : verdict_name(r.verdict)));
            break;
        }
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        long long budget_ms;
        std::function<Outcome()> body;
    };
    const std::vector<Criterion> criteria = {
        {"cycle solver table C_3..C_15", 60000, cycle_solver_table},
        {"cycle constructions C_7..C_63 at formula width", 30000, cycle_constructions},
        {"complete graph table K_4..K_8", 120000, complete_graph_table},
        {"every chord makes C_7 width 3", 30000, chord_drop},
        {"host graph size and degree formulas k=2..8", 5000, host_graph_formulas},
        {"prism products and the exhaustive k=4 refutation", 600000, products},
        {"coronas, both lifts, and the hypercube ladder", 120000, coronas_and_lifts},
        {"all 199 trees of order 3..10 are royal-zero", 900000, tree_conjecture_sweep},
        {"search agrees with the brute-force oracle", 600000, oracle_equivalence},
        {"dense order-7 graphs are all royal-one", 300000, size_threshold},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const Criterion& c = criteria[i];
        auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
        if (ms > c.budget_ms) {
            o.pass = false;
            std::string over = "over budget (" + std::to_string(ms) + " ms > " +
                               std::to_string(c.budget_ms) + " ms)";
            o.detail = o.detail.empty() ? over : o.detail + "; " + over;
        }
        std::printf("[%s] %zu. %s (%lld ms)%s%s\n", o.pass ? "PASS" : "FAIL", i + 1,
                    c.name.c_str(), ms, o.detail.empty() ? "" : " — ", o.detail.c_str());
        std::fflush(stdout);
        if (!o.pass) ++failed;
    }
    std::printf("%zu/%zu criteria pass\n", criteria.size() - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
