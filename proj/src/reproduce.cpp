// Regression fixtures: every concrete value the library is built around,
// recomputed from scratch and compared against its expected value. Grouped
// into named sets so the CLI can run one family or the whole table.

#include "royal/reproduce.hpp"

#include <chrono>
#include <functional>
#include <stdexcept>

#include "royal/coloring.hpp"
#include "royal/constructions.hpp"
#include "royal/generators.hpp"

namespace royal {

namespace {

using Clock = std::chrono::steady_clock;

struct RowBuilder {
    ReproduceReport& report;
    const SolveOptions& opts;

    void add(const std::string& claim, const std::string& expected,
             const std::function<std::string()>& compute) {
        ReproduceRow row;
        row.claim = claim;
        row.expected = expected;
        auto t0 = Clock::now();
        try {
            row.computed = compute();
        } catch (const SolveTimeout&) {
            row.computed = "timeout";
        } catch (const std::exception& e) {
            row.computed = std::string("error: ") + e.what();
        }
        row.ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
        row.pass = row.computed == row.expected;
        report.rows.push_back(std::move(row));
    }

    void add_index(const std::string& claim, const Graph& g, int expected) {
        add(claim, std::to_string(expected),
            [&, g] { return std::to_string(strong_royal_index(g, opts).index); });
    }
};

void cycles_fixtures(RowBuilder& b) {
    const int expected[] = {3, 3, 3, 3, 4, 4, 4, 4, 4, 4, 4, 4, 4};
    for (int n = 3; n <= 15; ++n)
        b.add_index("sroy(C_" + std::to_string(n) + ")", cycle_graph(n), expected[n - 3]);
    b.add("construct_cycle valid at formula width, n=8..63", "56/56", [&] {
        int good = 0, total = 0;
        for (int n = 8; n <= 63; ++n) {
            ++total;
            EdgeColoring c = construct_cycle(n);
            if (verify_strong_royal(cycle_graph(n), c).empty() && palette_width(c) == k_floor(n))
                ++good;
        }
        return std::to_string(good) + "/" + std::to_string(total);
    });
}

void complete_fixtures(RowBuilder& b) {
    const int expected[] = {3, 4, 4, 4, 4};
    for (int n = 4; n <= 8; ++n)
        b.add_index("sroy(K_" + std::to_string(n) + ")", complete_graph(n), expected[n - 4]);
}

void products_fixtures(RowBuilder& b) {
    b.add_index("sroy(K_5 x K_2 prism)", cartesian_k2(complete_graph(5)), 4);
    b.add_index("sroy(K_6 x K_2 prism)", cartesian_k2(complete_graph(6)), 4);
    b.add_index("sroy(K_7 x K_2 prism)", cartesian_k2(complete_graph(7)), 5);
    b.add("reference K_6 prism labeling verifies at width 4", "valid", [] {
        Graph g = cartesian_k2(complete_graph(6));
        VertexColoring labels;
        labels.palette_k = 4;
        auto L = [](std::initializer_list<int> cs) { return ColorSet::from_list(cs); };
        labels.colors = {L({1, 4}), L({1}),       L({1, 2, 4}),    L({1, 2, 3}),
                         L({1, 3}), L({1, 2}),    L({4}),          L({1, 3, 4}),
                         L({1, 2, 3, 4}),         L({2, 4}),       L({3, 4}),
                         L({2, 3, 4})};
        EdgeColoring c = intersection_coloring(g, labels);
        if (!verify_strong_royal(g, c).empty()) return std::string("invalid");
        return palette_width(c) == 4 ? std::string("valid") : std::string("wrong width");
    });
}

void coronas_fixtures(RowBuilder& b) {
    for (int n : {5, 6, 7}) {
        b.add("corona of K_" + std::to_string(n) + " colored at floor width", "valid width 4",
              [n] {
                  auto [g, c] = corona_complete(n);
                  if (!verify_strong_royal(g, c).empty()) return std::string("invalid");
                  return "valid width " + std::to_string(palette_width(c));
              });
    }
    b.add_index("sroy(corona of K_5)", corona(complete_graph(5)), 4);
    b.add("corona of C_7 classifies royal-zero at width 4", "royal-zero 4", [&] {
        Classification r = classify(corona(cycle_graph(7)), b.opts);
        return verdict_name(r.verdict) + " " + std::to_string(r.index);
    });
    for (int s : {4, 5, 8, 16}) {
        b.add("cubic caterpillar, spine " + std::to_string(s) + ", colored at floor width",
              "valid at floor", [s] {
                  EdgeColoring c = construct_cubic_caterpillar(s);
                  Graph g = cubic_caterpillar_graph(s);
                  if (!verify_strong_royal(g, c).empty()) return std::string("invalid");
                  return palette_width(c) == k_floor(g.order()) ? std::string("valid at floor")
                                                                : std::string("wrong width");
              });
    }
    b.add_index("sroy(cubic caterpillar, spine 5)", cubic_caterpillar_graph(5), 4);
}

void gk_fixtures(RowBuilder& b) {
    b.add("host graph size at width 3", "15",
          [] { return std::to_string(gk_build(3).graph.size()); });
    b.add("host graph sizes match the closed form, k=2..8", "7/7", [] {
        int good = 0;
        for (int k = 2; k <= 8; ++k)
            if (gk_build(k).graph.size() == gk_size(k)) ++good;
        return std::to_string(good) + "/7";
    });
    b.add("host graph degrees depend only on label cardinality, k=2..8", "all match", [] {
        for (int k = 2; k <= 8; ++k) {
            GkGraph gk = gk_build(k);
            for (int v = 0; v < gk.graph.order(); ++v)
                if (gk.graph.degree(v) != gk_degree(k, gk.labels.colors[v].count()))
                    return std::string("mismatch at k=") + std::to_string(k);
        }
        return std::string("all match");
    });
    b.add("host graph certificates verify, k=2..8", "7/7", [] {
        int good = 0;
        for (int k = 2; k <= 8; ++k) {
            GkGraph gk = gk_build(k);
            if (verify_strong_royal(gk.graph, gk.certificate).empty()) ++good;
        }
        return std::to_string(good) + "/7";
    });
}

void chords_fixtures(RowBuilder& b) {
    Graph c7 = cycle_graph(7);
    for (int u = 0; u < 7; ++u) {
        for (int v = u + 1; v < 7; ++v) {
            if (c7.has_edge(u, v)) continue;
            auto edges = c7.edges();
            edges.emplace_back(u, v);
            b.add_index("sroy(C_7 + chord " + std::to_string(u) + "-" + std::to_string(v) + ")",
                        Graph(7, std::move(edges)), 3);
        }
    }
}

}  // namespace

std::vector<std::string> reproduce_set_names() {
    return {"cycles", "complete", "products", "coronas", "gk", "chords", "all"};
}

ReproduceReport run_reproduce(const std::string& set_name, const SolveOptions& opts) {
    ReproduceReport report;
    report.fixture_set = set_name;
    RowBuilder b{report, opts};

    bool all = set_name == "all";
    bool known = all;
    if (all || set_name == "cycles") cycles_fixtures(b), known = true;
    if (all || set_name == "complete") complete_fixtures(b), known = true;
    if (all || set_name == "products") products_fixtures(b), known = true;
    if (all || set_name == "coronas") coronas_fixtures(b), known = true;
    if (all || set_name == "gk") gk_fixtures(b), known = true;
    if (all || set_name == "chords") chords_fixtures(b), known = true;
    if (!known)
        throw std::invalid_argument("unknown fixture set \"" + set_name +
                                    "\"; expected one of cycles, complete, products, coronas, "
                                    "gk, chords, all");
    return report;
}

std::string reproduce_to_text(const ReproduceReport& report) {
    std::size_t claim_w = 5, exp_w = 8;
    for (const auto& r : report.rows) {
        claim_w = std::max(claim_w, r.claim.size());
        exp_w = std::max(exp_w, r.expected.size());
    }
    std::string out;
    int passed = 0;
    for (const auto& r : report.rows) {
        out += r.pass ? "[PASS] " : "[FAIL] ";
        out += r.claim + std::string(claim_w - r.claim.size(), ' ');
        out += "  expected " + r.expected + std::string(exp_w - r.expected.size(), ' ');
        out += "  got " + r.computed;
        out += "  (" + std::to_string(r.ms) + " ms)\n";
        if (r.pass) ++passed;
    }
    out += std::to_string(passed) + "/" + std::to_string(report.rows.size()) + " fixtures pass (" +
           report.fixture_set + ")\n";
    return out;
}

}  // namespace royal
