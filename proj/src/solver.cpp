// Exact strong-royal / royal index computation.
//
// The search object is a vertex labeling ℓ: V → nonempty subsets of {1..k},
// standing for the induced coloring the final edge coloring will produce. A
// strong royal k-edge coloring exists iff such an ℓ exists that is injective,
// has intersecting labels across every edge, and has each ℓ(v) covered by the
// union of its neighbors' labels; the witness edge coloring is then
// c(uv) = ℓ(u) ∩ ℓ(v). (Royal mode relaxes injectivity to properness; embed
// mode drops the coverage condition, which is exactly membership of g in the
// intersection host graph on the 2^k-1 nonempty subsets.) The equivalence is
// validated against a brute-force edge-coloring oracle in the test suite.
//
// Backtracking assigns vertices in descending-degree order, candidates in
// increasing popcount; pruning beyond the direct constraint checks:
//   - coverage look-ahead: a vertex whose last unassigned neighbor is being
//     assigned must end up fully covered, and a vertex assigned after all its
//     neighbors must pick a subset of their union;
//   - singleton counting: an injective labeling leaves at most 2^k-1-n labels
//     unused, so at least k-(2^k-1-n) singleton labels are in play, but
//     singleton-labeled vertices are pairwise non-adjacent (two adjacent
//     singletons would have to intersect, hence coincide), so a vertex-
//     disjoint clique cover with fewer cliques than needed singletons refutes
//     the level with no search at all.

#include "royal/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <mutex>
#include <numeric>
#include <thread>
#include <vector>

#include "royal/generators.hpp"

namespace royal {

namespace {

using Clock = std::chrono::steady_clock;

struct SharedControl {
    std::atomic<bool> stop{false};
    Clock::time_point deadline;
    bool has_deadline = false;
};

std::int64_t elapsed_ms(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// All nonempty subsets of {1..k}, smallest cardinality first, numeric value
// as tiebreak — the candidate order everywhere, and the order that makes the
// deterministic single-worker certificate the lexicographically least
// labeling.
std::vector<std::uint32_t> candidate_labels(int k) {
    std::vector<std::uint32_t> cands((1u << k) - 1);
    std::iota(cands.begin(), cands.end(), 1u);
    std::stable_sort(cands.begin(), cands.end(), [](std::uint32_t a, std::uint32_t b) {
        int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    return cands;
}

std::vector<int> assignment_order(const Graph& g) {
    std::vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    return order;
}

// Greedy vertex-disjoint cover of V by cliques, highest-degree seeds first.
// Only the count and membership matter (fewer cliques = stronger singleton
// bound); on K_n [] K_2 this recovers the two K_n copies.
std::vector<int> clique_cover(const Graph& g, int& ncliques) {
    int n = g.order();
    std::vector<int> clique_of(n, -1);
    std::vector<int> seeds = assignment_order(g);
    ncliques = 0;
    for (int v : seeds) {
        if (clique_of[v] >= 0) continue;
        int c = ncliques++;
        clique_of[v] = c;
        std::vector<int> members{v};
        for (int u : g.neighbors(v)) {
            if (clique_of[u] >= 0) continue;
            bool joins = true;
            for (int w : members)
                if (w != v && !g.has_edge(u, w)) {
                    joins = false;
                    break;
                }
            if (joins) {
                clique_of[u] = c;
                members.push_back(u);
            }
        }
    }
    return clique_of;
}

struct Searcher {
    const Graph& g;
    int k;
    SearchMode mode;
    SharedControl& ctl;
    const std::vector<std::uint32_t>& cands;
    const std::vector<int>& order;
    const std::vector<int>& clique_of;

    std::vector<std::uint32_t> label;    // by vertex, 0 = unassigned
    std::vector<std::uint32_t> covered;  // union of assigned neighbors' labels
    std::vector<int> un_nbrs;            // unassigned-neighbor counts
    std::vector<char> is_assigned;
    std::vector<char> used;              // by label value (injective modes)
    std::vector<int> clique_free;
    std::vector<char> clique_single;
    int hosts = 0;
    int singles_needed = 0;
    int singles_placed = 0;

    std::uint64_t nodes = 0;
    std::uint64_t ticks = 0;
    bool timed_out = false;
    bool halted = false;  // latched: unwind everything once set
    std::vector<std::uint32_t> solution;

    // Undo log per recursion depth: (neighbor, previous covered mask).
    std::vector<std::vector<std::pair<int, std::uint32_t>>> frames;

    Searcher(const Graph& g, int k, SearchMode mode, SharedControl& ctl,
             const std::vector<std::uint32_t>& cands, const std::vector<int>& order,
             const std::vector<int>& clique_of, int ncliques, int singles_needed)
        : g(g),
          k(k),
          mode(mode),
          ctl(ctl),
          cands(cands),
          order(order),
          clique_of(clique_of),
          label(g.order(), 0),
          covered(g.order(), 0),
          un_nbrs(g.order()),
          is_assigned(g.order(), 0),
          used(injective() ? (1u << k) : 0, 0),
          clique_free(ncliques, 0),
          clique_single(ncliques, 0),
          singles_needed(singles_needed),
          frames(g.order()) {
        for (int v = 0; v < g.order(); ++v) un_nbrs[v] = g.degree(v);
        if (injective()) {
            for (int v = 0; v < g.order(); ++v) ++clique_free[clique_of[v]];
            for (int c = 0; c < ncliques; ++c)
                if (clique_free[c] > 0) ++hosts;
        }
    }

    bool injective() const { return mode != SearchMode::Royal; }
    bool coverage() const { return mode != SearchMode::Embed; }

    bool interrupted() {
        if (halted) return true;
        if ((++ticks & 1023) != 0) return false;
        if (ctl.stop.load(std::memory_order_relaxed)) return halted = true;
        if (ctl.has_deadline && Clock::now() > ctl.deadline) {
            timed_out = true;
            return halted = true;
        }
        return false;
    }

    bool feasible(int v, std::uint32_t L) const {
        for (int u : g.neighbors(v)) {
            if (!is_assigned[u]) continue;
            if (!(L & label[u])) return false;
            if (mode == SearchMode::Royal && L == label[u]) return false;
            // u's coverage closes out right now if v is its last unassigned
            // neighbor.
            if (coverage() && un_nbrs[u] == 1 && (label[u] & ~(covered[u] | L))) return false;
        }
        // A vertex assigned after all its neighbors must already be covered.
        if (coverage() && un_nbrs[v] == 0 && (L & ~covered[v])) return false;
        return true;
    }

    void push(int pos, int v, std::uint32_t L) {
        auto& frame = frames[pos];
        frame.clear();
        label[v] = L;
        is_assigned[v] = 1;
        for (int u : g.neighbors(v)) {
            frame.emplace_back(u, covered[u]);
            covered[u] |= L;
            --un_nbrs[u];
        }
        if (injective()) {
            used[L] = 1;
            int c = clique_of[v];
            bool was_host = !clique_single[c] && clique_free[c] > 0;
            --clique_free[c];
            if (std::popcount(L) == 1) {
                clique_single[c] = 1;
                ++singles_placed;
            }
            bool is_host = !clique_single[c] && clique_free[c] > 0;
            hosts += static_cast<int>(is_host) - static_cast<int>(was_host);
        }
    }

    void pop(int pos, int v, std::uint32_t L) {
        if (injective()) {
            int c = clique_of[v];
            bool was_host = !clique_single[c] && clique_free[c] > 0;
            ++clique_free[c];
            if (std::popcount(L) == 1) {
                clique_single[c] = 0;
                --singles_placed;
            }
            bool is_host = !clique_single[c] && clique_free[c] > 0;
            hosts += static_cast<int>(is_host) - static_cast<int>(was_host);
            used[L] = 0;
        }
        for (auto& [u, prev] : frames[pos]) {
            covered[u] = prev;
            ++un_nbrs[u];
        }
        label[v] = 0;
        is_assigned[v] = 0;
    }

    // Depth-first over positions [pos, n); true iff a full labeling was found.
    bool dfs(int pos) {
        if (pos == g.order()) {
            solution = label;
            return true;
        }
        int v = order[pos];
        for (std::uint32_t L : cands) {
            if (interrupted()) return false;
            if (injective() && used[L]) continue;
            if (!feasible(v, L)) continue;
            push(pos, v, L);
            ++nodes;
            // Singleton budget: every still-needed singleton needs a clique
            // that has no singleton yet and room to host one.
            bool pruned =
                injective() && singles_placed + hosts < singles_needed;
            if (!pruned && dfs(pos + 1)) return true;
            pop(pos, v, L);
        }
        return false;
    }
};

LevelResult run_level(const Graph& g, int k, SearchMode mode, const SolveOptions& opts) {
    if (k < 1 || k > ColorSet::kMaxPalette)
        throw std::invalid_argument("palette size must be in 1..16, got " +
                                    std::to_string(k));
    if (g.order() < 3)
        throw std::invalid_argument("index search needs order >= 3");
    if (!is_connected(g))
        throw std::invalid_argument("index search needs a connected graph");

    auto start = Clock::now();
    LevelResult out;
    int n = g.order();
    std::int64_t nlabels = (std::int64_t{1} << k) - 1;

    bool injective = mode != SearchMode::Royal;
    if (injective && n > nlabels) {
        // Pigeonhole: fewer labels than vertices — refuted with no search.
        out.status = LevelStatus::Refuted;
        out.stats.ms = elapsed_ms(start);
        return out;
    }

    int ncliques = 0;
    std::vector<int> cliques = clique_cover(g, ncliques);
    int singles_needed =
        injective ? std::max<std::int64_t>(0, k - (nlabels - n)) : 0;
    if (injective && singles_needed > ncliques) {
        // More singleton labels forced into play than cliques that could
        // host one.
        out.status = LevelStatus::Refuted;
        out.stats.ms = elapsed_ms(start);
        return out;
    }

    std::vector<std::uint32_t> cands = candidate_labels(k);
    std::vector<int> order = assignment_order(g);

    SharedControl ctl;
    if (opts.timeout_ms > 0) {
        ctl.has_deadline = true;
        ctl.deadline = start + std::chrono::milliseconds(opts.timeout_ms);
    }

    std::vector<std::uint32_t> solution;
    bool found = false, timed_out = false;
    std::uint64_t nodes = 0;

    int workers = std::max(1, opts.workers);
    if (workers == 1) {
        Searcher s(g, k, mode, ctl, cands, order, cliques, ncliques, singles_needed);
        found = s.dfs(0);
        if (found) solution = std::move(s.solution);
        timed_out = s.timed_out;
        nodes = s.nodes;
    } else {
        // Split the first assignment level round-robin; workers share the
        // stop flag and a first-result cell.
        std::mutex cell_mutex;
        std::atomic<std::uint64_t> total_nodes{0};
        std::atomic<bool> any_timeout{false};
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                Searcher s(g, k, mode, ctl, cands, order, cliques, ncliques,
                           singles_needed);
                int v0 = order[0];
                for (std::size_t i = w; i < cands.size(); i += workers) {
                    if (ctl.stop.load(std::memory_order_relaxed)) break;
                    std::uint32_t L = cands[i];
                    if (!s.feasible(v0, L)) continue;
                    s.push(0, v0, L);
                    ++s.nodes;
                    bool ok = !(s.injective() &&
                                s.singles_placed + s.hosts < s.singles_needed) &&
                              s.dfs(1);
                    if (ok) {
                        std::lock_guard<std::mutex> lock(cell_mutex);
                        if (!found) {
                            found = true;
                            solution = s.solution;
                        }
                        ctl.stop.store(true, std::memory_order_relaxed);
                        break;
                    }
                    s.pop(0, v0, L);
                    if (s.timed_out) break;
                }
                total_nodes += s.nodes;
                if (s.timed_out) any_timeout = true;
            });
        }
        for (auto& t : pool) t.join();
        nodes = total_nodes.load();
        timed_out = any_timeout.load() && !found;
    }

    out.stats.nodes = nodes;
    out.stats.ms = elapsed_ms(start);
    if (found) {
        out.status = LevelStatus::Found;
        out.labeling.palette_k = k;
        out.labeling.colors.reserve(n);
        for (int v = 0; v < n; ++v)
            out.labeling.colors.push_back(ColorSet::from_mask(solution[v]));
        if (mode != SearchMode::Embed) {
            out.certificate.palette_k = k;
            out.certificate.colors.reserve(g.size());
            for (auto [u, v] : g.edges())
                out.certificate.colors.push_back(out.labeling.colors[u] &
                                                 out.labeling.colors[v]);
            auto violations = mode == SearchMode::StrongRoyal
                                  ? verify_strong_royal(g, out.certificate)
                                  : verify_royal(g, out.certificate);
            if (!violations.empty())
                throw std::logic_error(
                    "solver produced an invalid certificate: " +
                    describe(violations.front()));
        }
    } else if (timed_out) {
        out.status = LevelStatus::TimedOut;
    } else {
        out.status = LevelStatus::Refuted;
    }
    return out;
}

}  // namespace

int k_floor(int n) {
    if (n < 3) throw std::invalid_argument("k_floor needs order >= 3");
    int k = 1;
    while ((std::int64_t{1} << k) - 1 < n) ++k;
    return k;
}

std::int64_t gk_size(int k) {
    if (k < 1 || k > 16) throw std::invalid_argument("gk_size parameter must be in 1..16");
    std::int64_t p4 = 1, p3 = 1, p2 = 1;
    for (int i = 0; i < k; ++i) {
        p4 *= 4;
        p3 *= 3;
        p2 *= 2;
    }
    return (p4 - p3 - p2 + 1) / 2;
}

LevelResult search_level(const Graph& g, int k, SearchMode mode, const SolveOptions& opts) {
    return run_level(g, k, mode, opts);
}

LevelResult exists_strong_royal(const Graph& g, int k, const SolveOptions& opts) {
    return search_level(g, k, SearchMode::StrongRoyal, opts);
}

namespace {

SolveResult index_from(const Graph& g, SearchMode mode, int k_from, int k_to,
                       const SolveOptions& opts) {
    SearchStats total;
    for (int k = k_from; k <= k_to; ++k) {
        LevelResult lr = search_level(g, k, mode, opts);
        total.nodes += lr.stats.nodes;
        total.ms += lr.stats.ms;
        if (lr.status == LevelStatus::Found)
            return {k, std::move(lr.certificate), std::move(lr.labeling), total};
        if (lr.status == LevelStatus::TimedOut)
            throw SolveTimeout(k, k_to, total);
    }
    throw std::logic_error("no coloring found up to k=" + std::to_string(k_to) +
                           "; this contradicts the k_floor+2 bound and signals a "
                           "solver bug");
}

}  // namespace

SolveResult strong_royal_index(const Graph& g, const SolveOptions& opts) {
    int kf = k_floor(g.order());
    return index_from(g, SearchMode::StrongRoyal, kf, kf + 2, opts);
}

SolveResult royal_index(const Graph& g, const SolveOptions& opts) {
    int kf = k_floor(g.order());
    // roy <= sroy, so the same alarm bound applies.
    return index_from(g, SearchMode::Royal, 1, kf + 2, opts);
}

bool brute_force_exists(const Graph& g, int k, bool strong) {
    if (k < 1 || k > ColorSet::kMaxPalette)
        throw std::invalid_argument("palette size must be in 1..16");
    if (!is_connected(g))
        throw std::invalid_argument("brute force needs a connected graph");
    int m = g.size(), n = g.order();
    std::int64_t nlabels = (std::int64_t{1} << k) - 1;
    double combos = std::pow(static_cast<double>(nlabels), m);
    if (combos > 1e8)
        throw std::invalid_argument("brute force guard: (2^k-1)^m exceeds 1e8");

    std::vector<std::uint32_t> choice(m, 1);
    std::vector<std::uint32_t> ind(n);
    std::vector<char> seen(std::size_t{1} << k, 0);
    while (true) {
        std::fill(ind.begin(), ind.end(), 0u);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges()[e];
            ind[u] |= choice[e];
            ind[v] |= choice[e];
        }
        bool ok = true;
        if (strong) {
            for (int v = 0; v < n && ok; ++v) {
                if (seen[ind[v]]) ok = false;
                seen[ind[v]] = 1;
            }
            for (int v = 0; v < n; ++v) seen[ind[v]] = 0;
        } else {
            for (auto [u, v] : g.edges())
                if (ind[u] == ind[v]) {
                    ok = false;
                    break;
                }
        }
        if (ok) return true;
        int e = 0;
        while (e < m && choice[e] == static_cast<std::uint32_t>(nlabels)) choice[e++] = 1;
        if (e == m) return false;
        ++choice[e];
    }
}

int spanning_tree_upper(const Graph& g, int samples, const SolveOptions& opts) {
    std::vector<Graph> trees;
    trees.push_back(spanning_tree(g, SpanningStrategy::Bfs));
    trees.push_back(spanning_tree(g, SpanningStrategy::Dfs));
    for (int s = 0; s < samples; ++s)
        trees.push_back(spanning_tree(g, SpanningStrategy::Random, s));
    int best = -1;
    for (const Graph& t : trees) {
        int idx = strong_royal_index(t, opts).index;
        if (best < 0 || idx < best) best = idx;
    }
    return 1 + best;
}

bool gk_membership_bound(const Graph& g, const SolveOptions& opts) {
    int kf = k_floor(g.order());
    LevelResult lr = search_level(g, kf, SearchMode::Embed, opts);
    if (lr.status == LevelStatus::TimedOut) throw SolveTimeout(kf, kf, lr.stats);
    return lr.status == LevelStatus::Found;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::RoyalZero: return "royal-zero";
        case Verdict::RoyalOne: return "royal-one";
        case Verdict::Anomaly: return "anomaly";
    }
    return "?";
}

std::string method_name(Method m) {
    switch (m) {
        case Method::ExactSearch: return "exact-search";
        case Method::MinDegreeShortcut: return "min-degree-shortcut";
        case Method::SizeShortcutSearch: return "size-shortcut+search";
        case Method::SpanningTreeBoundSearch: return "spanning-tree-bound+search";
    }
    return "?";
}

namespace {

Verdict verdict_for(int index, int kf) {
    if (index == kf) return Verdict::RoyalZero;
    if (index == kf + 1) return Verdict::RoyalOne;
    return Verdict::Anomaly;
}

}  // namespace

Classification classify(const Graph& g, const SolveOptions& opts) {
    if (g.order() < 3)
        throw std::invalid_argument("classification needs order >= 3");
    if (!is_connected(g))
        throw std::invalid_argument("classification needs a connected graph");

    Classification out;
    int n = g.order();
    int kf = k_floor(n);
    out.k_floor = kf;

    Metrics m = metrics(g);

    // Route (i): high minimum degree pins royal-one outright.
    if (m.min_degree >= (1 << (kf - 1))) {
        out.verdict = Verdict::RoyalOne;
        out.index = kf + 1;
        out.method = Method::MinDegreeShortcut;
        return out;
    }

    // Route (ii): more edges than the width-kf host graph has — the k_floor
    // level cannot succeed and is skipped.
    bool skip_floor = g.size() > gk_size(kf);
    if (!skip_floor) {
        LevelResult lr = exists_strong_royal(g, kf, opts);
        out.stats.nodes += lr.stats.nodes;
        out.stats.ms += lr.stats.ms;
        if (lr.status == LevelStatus::TimedOut)
            throw SolveTimeout(kf, kf + 2, out.stats);
        if (lr.status == LevelStatus::Found) {
            out.verdict = Verdict::RoyalZero;
            out.index = kf;
            out.method = Method::ExactSearch;
            out.certificate = std::move(lr.certificate);
            return out;
        }
    }

    // k_floor is impossible. For non-trees, a royal-zero spanning tree
    // settles royal-one: keep the tree's coloring and put the fresh color
    // kf+1 on every non-tree edge (stripping kf+1 shows the induced colors
    // stay pairwise distinct).
    if (!skip_floor && g.size() > n - 1) {
        Graph tree = spanning_tree(g, SpanningStrategy::Bfs);
        SolveResult tr = strong_royal_index(tree, opts);
        out.stats.nodes += tr.stats.nodes;
        out.stats.ms += tr.stats.ms;
        if (tr.index == kf) {
            EdgeColoring lifted;
            lifted.palette_k = kf + 1;
            lifted.colors.resize(g.size());
            for (int e = 0; e < g.size(); ++e) {
                auto [u, v] = g.edges()[e];
                int te = tree.edge_index(u, v);
                lifted.colors[e] = te >= 0 ? tr.certificate.colors[te]
                                           : ColorSet::single(kf + 1);
            }
            if (!verify_strong_royal(g, lifted).empty())
                throw std::logic_error("spanning-tree lift produced an invalid certificate");
            out.verdict = Verdict::RoyalOne;
            out.index = kf + 1;
            out.method = Method::SpanningTreeBoundSearch;
            out.certificate = std::move(lifted);
            return out;
        }
    }

    // Exact search upward from kf+1.
    SolveResult rest = index_from(g, SearchMode::StrongRoyal, kf + 1, kf + 2, opts);
    out.stats.nodes += rest.stats.nodes;
    out.stats.ms += rest.stats.ms;
    out.verdict = verdict_for(rest.index, kf);
    out.index = rest.index;
    out.method = skip_floor ? Method::SizeShortcutSearch : Method::ExactSearch;
    out.certificate = std::move(rest.certificate);
    return out;
}

}  // namespace royal
