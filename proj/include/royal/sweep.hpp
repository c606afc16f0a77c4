#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "royal/graph.hpp"
#include "royal/solver.hpp"

namespace royal {

// What counts as a counterexample in a sweep: trees are conjectured to be
// royal-zero from order 4 up, general graphs merely to avoid anomalies.
enum class ConjectureScope { NoAnomaly, TreesRoyalZero };

std::string scope_name(ConjectureScope s);

struct SweepRow {
    std::string graph6;
    int n = 0;
    int m = 0;
    int k_floor = 0;
    // -1 when the solve timed out and the index is not pinned down.
    int index = -1;
    Verdict verdict = Verdict::RoyalZero;
    Method method = Method::ExactSearch;
    std::int64_t nodes = 0;
    std::int64_t ms = 0;
    bool timed_out = false;
    bool counterexample = false;
};

struct SweepOptions {
    // Graphs classified concurrently. Each individual solve stays
    // single-threaded so node counts (and hence the CSV) never depend on the
    // pool size.
    int workers = 1;
    std::int64_t timeout_ms = 300000;  // per solver level
    bool deterministic = false;        // report ms as 0 for stable output
};

struct SweepReport {
    std::string description;
    ConjectureScope scope = ConjectureScope::NoAnomaly;
    std::vector<SweepRow> rows;                // in input order
    std::vector<std::size_t> counterexamples;  // indices into rows
    int timed_out = 0;                         // rows with no settled verdict
};

// Classify every graph and flag scope violations. Row order equals input
// order regardless of worker count.
SweepReport sweep_graphs(const std::vector<Graph>& graphs, ConjectureScope scope,
                         const SweepOptions& opts = {}, const std::string& description = "");

// Every free tree of each order in [min_order, max_order], smaller orders
// first, under the tree conjecture scope.
SweepReport sweep_trees(int min_order, int max_order, const SweepOptions& opts = {});

// graph6, n, m, k_floor, index, verdict, method, nodes, ms — one line per
// row, header first. Timed-out rows carry verdict "timeout" and index -1.
std::string sweep_to_csv(const SweepReport& report);
std::string sweep_to_json(const SweepReport& report);

}  // namespace royal
