#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "royal/coloring.hpp"
#include "royal/graph.hpp"

namespace royal {

// The unique k with 2^{k-1} <= n <= 2^k - 1 (pigeonhole lower bound for the
// strong royal index). Throws for n < 3.
int k_floor(int n);

// Number of edges of the intersection host graph on all nonempty subsets of
// {1..k}: (4^k - 3^k - 2^k + 1) / 2.
std::int64_t gk_size(int k);

struct SearchStats {
    std::uint64_t nodes = 0;  // assignments explored
    std::int64_t ms = 0;      // wall time
};

struct SolveOptions {
    int workers = 1;                   // >1 splits the first assignment level
    std::int64_t timeout_ms = 300000;  // per (graph, k) search level
};

// What one fixed-k search can conclude.
enum class LevelStatus { Found, Refuted, TimedOut };

struct LevelResult {
    LevelStatus status = LevelStatus::Refuted;
    // Set when status == Found; the labeling is the target induced coloring,
    // the certificate its pairwise-intersection edge coloring.
    VertexColoring labeling;
    EdgeColoring certificate;
    SearchStats stats;
};

// Search modes share one backtracker:
//   StrongRoyal  injective labels, adjacent labels intersect, each label
//                covered by the union of its neighbors' labels
//   Royal        properness instead of injectivity, same coverage
//   Embed        injective + intersecting only (host-graph membership)
enum class SearchMode { StrongRoyal, Royal, Embed };

LevelResult search_level(const Graph& g, int k, SearchMode mode,
                         const SolveOptions& opts = {});

// Fixed-k decision for the strong royal mode. Refuted means exhaustive
// (no labeling exists); n > 2^k - 1 refutes immediately by pigeonhole.
LevelResult exists_strong_royal(const Graph& g, int k, const SolveOptions& opts = {});

struct SolveResult {
    int index = 0;
    EdgeColoring certificate;
    VertexColoring witness_labeling;
    SearchStats stats;
};

// Raised when a search level hits its time budget: the levels below
// lower_bound are refuted, upper_bound is the general bound every graph satisfies.
struct SolveTimeout : std::runtime_error {
    SolveTimeout(int lower_bound, int upper_bound, SearchStats stats)
        : std::runtime_error("search level timed out; index known to lie in [" +
                             std::to_string(lower_bound) + "," +
                             std::to_string(upper_bound) + "]"),
          lower_bound(lower_bound),
          upper_bound(upper_bound),
          stats(stats) {}
    int lower_bound;
    int upper_bound;
    SearchStats stats;
};

// Minimum k admitting a strong royal k-edge coloring, searched upward from
// k_floor. Levels k_floor..k_floor+2 are tried; if even k_floor+2 is refuted
// something is deeply wrong (k_floor+2 is a bound no graph exceeds) and a
// logic_error is thrown rather than a silent answer.
SolveResult strong_royal_index(const Graph& g, const SolveOptions& opts = {});

// Minimum k admitting a royal k-edge coloring, searched upward from k = 1.
SolveResult royal_index(const Graph& g, const SolveOptions& opts = {});

// Enumerate every edge coloring over nonempty subsets of {1..k} and test it
// directly — the independent oracle for the labeling characterization.
// Guarded to (2^k - 1)^m <= 10^8 colorings.
bool brute_force_exists(const Graph& g, int k, bool strong);

// 1 + min sroy over sampled spanning trees (bfs, dfs, and `samples` seeded
// random trees) — an upper bound for sroy(g).
int spanning_tree_upper(const Graph& g, int samples = 2, const SolveOptions& opts = {});

// True iff g embeds in the intersection host graph at k = k_floor(order):
// an injective labeling with adjacent labels intersecting exists (coverage
// waived). False certifies sroy(g) > k_floor.
bool gk_membership_bound(const Graph& g, const SolveOptions& opts = {});

enum class Verdict { RoyalZero, RoyalOne, Anomaly };
enum class Method { ExactSearch, MinDegreeShortcut, SizeShortcutSearch, SpanningTreeBoundSearch };

std::string verdict_name(Verdict v);    // "royal-zero", ...
std::string method_name(Method m);      // "exact-search", ...

struct Classification {
    Verdict verdict = Verdict::RoyalZero;
    int k_floor = 0;
    int index = 0;
    Method method = Method::ExactSearch;
    // Present unless a shortcut concluded without producing a coloring.
    std::optional<EdgeColoring> certificate;
    SearchStats stats;
};

// Verdict for a connected graph of order >= 3, using the cheap routes first:
//   (i)  min degree >= 2^{k_floor-1}  -> royal-one, no search;
//   (ii) size > gk_size(k_floor)      -> the k_floor level cannot succeed and
//        is skipped;
//   (iii) otherwise exact search at k_floor; on refutation a spanning-tree
//        bound can settle royal-one (tree certificate + one fresh color on
//        the non-tree edges) before any exact k_floor+1 search is attempted.
Classification classify(const Graph& g, const SolveOptions& opts = {});

}  // namespace royal
