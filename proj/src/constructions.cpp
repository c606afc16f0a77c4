// Constructive certificates: host graphs, corona/product lifts, the
// path/cycle doubling scheme, and the cubic-caterpillar colorings.
//
// Every constructor re-verifies its output before returning and throws
// logic_error on failure — a construction that produces an invalid coloring
// is a bug, never a value. The path and cycle builders are recursive with
// memoized bases:
//   - paths P_3..P_15 come from an exhaustive lexicographic search (for
//     r >= 7 constrained to contain the "hook": consecutive edge colors
//     {1,2},{2},{2} with two spare vertices on the left and one on the
//     right);
//   - P_2r doubles P_r: keep the base colors (vertices v_1..v_r), repeat the
//     last base color on the joining edge, mirror the base colors union the
//     fresh top color k on the second half (vertices u_r..u_1), so second-
//     half vertices repeat the first-half colors union {k};
//   - P_2r+1 appends one edge colored {k} at the mirrored end, whose new
//     endpoint alone is colored {k};
//   - C_2r closes P_2r with the first base color;
//   - C_2r+1 deletes the mirrored hook edge (colored {2,k}) of C_2r and
//     splices in a vertex via two edges colored {k}; the neighboring induced
//     colors {1,2,k} and {2,k} are unchanged by the splice, and the new
//     vertex's color {k} is fresh — both facts asserted before and after.

#include "royal/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <string>

#include "royal/generators.hpp"
#include "royal/solver.hpp"

namespace royal {

namespace {

// Edge colors along a path, position j = edge (v_j, v_j+1); the working form
// of all path/cycle recursions before graph edge-index assembly.
using PathColors = std::vector<std::uint32_t>;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

EdgeColoring assemble(const Graph& g, int palette_k,
                      const std::vector<std::tuple<int, int, std::uint32_t>>& colored) {
    EdgeColoring c;
    c.palette_k = palette_k;
    c.colors.assign(g.size(), ColorSet{});
    for (auto [u, v, mask] : colored) {
        int e = g.edge_index(u, v);
        if (e < 0) throw std::logic_error("construction referenced a missing edge");
        c.colors[e] = ColorSet::from_mask(mask);
    }
    return c;
}

void verify_or_die(const Graph& g, const EdgeColoring& c, const std::string& who) {
    auto violations = verify_strong_royal(g, c);
    if (!violations.empty())
        throw std::logic_error(who + " produced an invalid coloring: " +
                               describe(violations.front()));
}

// Smallest 1-based i with edge colors e_i = {1,2}, e_{i+1} = e_{i+2} = {2}
// and 3 <= i <= r-4, or -1. The two-left/one-right margin keeps the mirrored
// copy interior to the second half of the doubled cycle, and {1,2} exactly
// (not merely containing 1) keeps the splice from changing its neighbor's
// induced color.
int find_hook(const PathColors& e) {
    int r = static_cast<int>(e.size()) + 1;
    for (int i = 3; i + 4 <= r; ++i)
        if (e[i - 1] == 0b11 && e[i] == 0b10 && e[i + 1] == 0b10) return i;
    return -1;
}

// Exhaustive lexicographic derivation of a strong royal coloring of P_r at
// width k_floor(r): masks ascend per edge, vertex colors are rejected as
// duplicates the moment they are final. For r >= 7 the hook is forced up
// front — each admissible window start q gets the pattern {1,2},{2},{2}
// pinned at edges q..q+2 and the remaining edges searched, earliest q first.
PathColors derive_path_base(int r) {
    int k = k_floor(r);
    std::uint32_t top = (1u << k) - 1;
    int m = r - 1;

    std::vector<int> window_starts;
    if (r < 7) {
        window_starts.push_back(-1);  // no hook required
    } else {
        for (int q = 2; q <= r - 5; ++q) window_starts.push_back(q);
    }

    for (int q : window_starts) {
        PathColors e(m, 0);
        PathColors forced(m, 0);
        if (q >= 0) {
            forced[q] = 0b11;
            forced[q + 1] = 0b10;
            forced[q + 2] = 0b10;
        }
        std::vector<char> seen(top + 1, 0);

        auto dfs = [&](auto&& self, int pos) -> bool {
            if (pos == m) return true;
            std::uint32_t lo = forced[pos] ? forced[pos] : 1;
            std::uint32_t hi = forced[pos] ? forced[pos] : top;
            for (std::uint32_t mask = lo; mask <= hi; ++mask) {
                // choosing e[pos] finalizes the color of vertex pos (and of
                // vertex pos+1 on the last edge)
                std::uint32_t color = pos == 0 ? mask : e[pos - 1] | mask;
                if (seen[color]) continue;
                bool closes = pos == m - 1;
                if (closes && (seen[mask] || mask == color)) continue;
                e[pos] = mask;
                seen[color] = 1;
                if (closes) seen[mask] = 1;
                if (self(self, pos + 1)) return true;
                seen[color] = 0;
                if (closes) seen[mask] = 0;
                e[pos] = 0;
            }
            return false;
        };
        if (dfs(dfs, 0)) {
            if (r >= 7 && find_hook(e) < 0)
                throw std::logic_error("forced hook window is not detectable after the fill");
            return e;
        }
    }
    throw std::logic_error("no hook-bearing path coloring exists at r=" + std::to_string(r) +
                           "; this falsifies the construction's premise");
}

PathColors double_path(const PathColors& base, std::uint32_t kbit) {
    int r = static_cast<int>(base.size()) + 1;
    PathColors out(2 * r - 1);
    for (int j = 0; j <= r - 2; ++j) out[j] = base[j];
    out[r - 1] = base[r - 2];
    for (int j = r; j <= 2 * r - 2; ++j) out[j] = base[2 * r - j - 2] | kbit;
    return out;
}

PathColors path_colors(int r) {
    static std::mutex mutex;
    static std::map<int, PathColors> memo;
    std::lock_guard<std::mutex> lock(mutex);

    auto build = [&](auto&& self, int len) -> const PathColors& {
        auto it = memo.find(len);
        if (it != memo.end()) return it->second;
        PathColors e;
        if (len <= 15) {
            e = derive_path_base(len);
        } else if (len % 2 == 0) {
            e = double_path(self(self, len / 2), 1u << (k_floor(len) - 1));
        } else {
            e = self(self, len - 1);
            e.push_back(1u << (k_floor(len) - 1));
        }
        return memo.emplace(len, std::move(e)).first->second;
    };
    return build(build, r);
}

std::vector<std::uint32_t> induced_masks(const Graph& g, const EdgeColoring& c) {
    VertexColoring ind = induced(g, c);
    std::vector<std::uint32_t> out(g.order());
    for (int v = 0; v < g.order(); ++v) out[v] = ind.colors[v].mask();
    return out;
}

// C_2r from the doubled path: v-half keeps the base colors, the joining edge
// repeats the last base color and the closing edge repeats the first.
EdgeColoring even_cycle(int n) {
    int r = n / 2;
    PathColors base = path_colors(r);
    int k = k_floor(n);
    std::uint32_t kbit = 1u << (k - 1);
    Graph g = generate({Family::Cycle, n});
    std::vector<std::tuple<int, int, std::uint32_t>> colored;
    for (int j = 0; j <= r - 2; ++j) colored.emplace_back(j, j + 1, base[j]);
    colored.emplace_back(r - 1, r, base[r - 2]);
    for (int j = r; j <= 2 * r - 2; ++j)
        colored.emplace_back(j, j + 1, base[2 * r - j - 2] | kbit);
    colored.emplace_back(0, 2 * r - 1, base[0]);
    return assemble(g, k, colored);
}

EdgeColoring odd_cycle(int n, const EdgeColoring& even_c) {
    int r = (n - 1) / 2;
    int k = k_floor(n);
    std::uint32_t kbit = 1u << (k - 1);
    int hook = find_hook(path_colors(r));
    if (hook < 0)
        throw std::logic_error("no hook in the base path at r=" + std::to_string(r) +
                               "; this falsifies the construction's premise");

    Graph even_g = generate({Family::Cycle, n - 1});
    std::vector<std::uint32_t> ind = induced_masks(even_g, even_c);

    // the mirrored hook edge in C_{n-1}: u_{i+2} sits at p, u_{i+1} at p+1
    int p = (n - 1) - hook - 2;
    std::uint32_t two = 0b10;
    if (ind[p + 1] != (0b11 | kbit) ||
        even_c.colors[even_g.edge_index(p, p + 1)].mask() != (two | kbit) ||
        ind[p] != (two | kbit))
        throw std::logic_error("mirrored hook has the wrong structure; splice would corrupt colors");
    for (std::uint32_t v : ind)
        if (v == kbit)
            throw std::logic_error("a vertex already wears the bare top color; splice would collide");

    // splice: old vertices above p shift up by one, the new vertex is p+1
    Graph g = generate({Family::Cycle, n});
    std::vector<std::tuple<int, int, std::uint32_t>> colored;
    for (int e = 0; e < even_g.size(); ++e) {
        auto [a, b] = even_g.edges()[e];
        if (a == p && b == p + 1) continue;  // the deleted edge
        int a2 = a > p ? a + 1 : a;
        int b2 = b > p ? b + 1 : b;
        colored.emplace_back(a2, b2, even_c.colors[e].mask());
    }
    colored.emplace_back(p, p + 1, kbit);
    colored.emplace_back(p + 1, p + 2, kbit);
    EdgeColoring out = assemble(g, k, colored);

    // the splice's whole effect: one new vertex colored {k}
    std::vector<std::uint32_t> ind2 = induced_masks(g, out);
    if (ind2[p + 1] != kbit)
        throw std::logic_error("spliced vertex is not colored by the bare top color");
    return out;
}

EdgeColoring cycle_certificate(int n) {
    static std::mutex mutex;
    static std::map<int, EdgeColoring> memo;
    std::lock_guard<std::mutex> lock(mutex);

    auto build = [&](auto&& self, int len) -> const EdgeColoring& {
        auto it = memo.find(len);
        if (it != memo.end()) return it->second;
        EdgeColoring c;
        if (len <= 13) {
            c = strong_royal_index(generate({Family::Cycle, len})).certificate;
        } else if (len % 2 == 0) {
            c = even_cycle(len);
        } else {
            c = odd_cycle(len, self(self, len - 1));
        }
        return memo.emplace(len, std::move(c)).first->second;
    };
    return build(build, n);
}

// Case-2 caterpillar spine for s a power of two: P_4 base {1},{1,2},{1,3},
// then double by repeating the middle color and mirroring with the fresh top
// color. Every edge and vertex color contains 1, and v_0 alone is colored {1}.
PathColors case2_spine(int s) {
    if (s == 4) return {0b001, 0b011, 0b101};
    PathColors base = case2_spine(s / 2);
    int k = std::bit_width(static_cast<unsigned>(s));  // width: 3 at s=4, +1 per doubling
    std::uint32_t kbit = 1u << (k - 1);
    int m = s / 2;
    PathColors out(s - 1);
    for (int j = 0; j <= m - 2; ++j) out[j] = base[j];
    out[m - 1] = base[m - 2];
    for (int t = m; t <= s - 2; ++t) out[t] = base[2 * m - 2 - t] | kbit;
    return out;
}

}  // namespace

GkGraph gk_build(int k) {
    require(k >= 2 && k <= 10, "host graph width must be in 2..10");
    Graph g = generate({Family::Gk, k});
    VertexColoring labels;
    labels.palette_k = k;
    labels.colors.reserve(g.order());
    std::vector<std::vector<int>> partition(k);
    for (int v = 0; v < g.order(); ++v) {
        std::uint32_t mask = static_cast<std::uint32_t>(v) + 1;
        labels.colors.push_back(ColorSet::from_mask(mask));
        partition[std::popcount(mask) - 1].push_back(v);
    }
    EdgeColoring cert = intersection_coloring(g, labels);
    verify_or_die(g, cert, "gk_build");
    return GkGraph{k, std::move(g), std::move(labels), std::move(partition), std::move(cert)};
}

int gk_degree(int k, int i) {
    require(k >= 1 && k <= 16, "host graph width must be in 1..16");
    require(i >= 1 && i <= k, "label cardinality must be in 1..k");
    return ((1 << i) - 1) * (1 << (k - i)) - 1;
}

EdgeColoring intersection_coloring(const Graph& g, const VertexColoring& labels) {
    require(labels.colors.size() == static_cast<std::size_t>(g.order()),
            "one label per vertex required");
    require(labels.palette_k >= 1 && labels.palette_k <= ColorSet::kMaxPalette,
            "label palette must be in 1..16");
    for (int v = 0; v < g.order(); ++v)
        require(!labels.colors[v].empty(), "labels must be nonempty");
    EdgeColoring c;
    c.palette_k = labels.palette_k;
    c.colors.reserve(g.size());
    for (auto [u, v] : g.edges()) {
        ColorSet both = labels.colors[u] & labels.colors[v];
        require(!both.empty(), "adjacent labels must intersect: vertices " +
                                   std::to_string(u) + " and " + std::to_string(v));
        c.colors.push_back(both);
    }
    return c;
}

std::pair<Graph, EdgeColoring> lift_corona(const Graph& g, const EdgeColoring& c) {
    require(verify_strong_royal(g, c).empty(), "input must be a valid strong royal coloring");
    require(c.palette_k < ColorSet::kMaxPalette, "no room for a fresh color");
    int n = g.order(), k = c.palette_k;
    VertexColoring ind = induced(g, c);
    Graph h = corona(g);
    std::vector<std::tuple<int, int, std::uint32_t>> colored;
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges()[e];
        colored.emplace_back(u, v, c.colors[e].with(k + 1).mask());
    }
    for (int i = 0; i < n; ++i) colored.emplace_back(i, n + i, ind.colors[i].mask());
    EdgeColoring out = assemble(h, k + 1, colored);
    verify_or_die(h, out, "lift_corona");
    return {std::move(h), std::move(out)};
}

std::pair<Graph, EdgeColoring> lift_cartesian_k2(const Graph& g, const EdgeColoring& c) {
    require(verify_strong_royal(g, c).empty(), "input must be a valid strong royal coloring");
    require(c.palette_k < ColorSet::kMaxPalette, "no room for a fresh color");
    int n = g.order(), k = c.palette_k;
    VertexColoring ind = induced(g, c);
    Graph h = cartesian_k2(g);
    std::vector<std::tuple<int, int, std::uint32_t>> colored;
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges()[e];
        colored.emplace_back(u, v, c.colors[e].mask());
        colored.emplace_back(n + u, n + v, c.colors[e].with(k + 1).mask());
    }
    for (int i = 0; i < n; ++i) colored.emplace_back(i, n + i, ind.colors[i].mask());
    EdgeColoring out = assemble(h, k + 1, colored);
    verify_or_die(h, out, "lift_cartesian_k2");
    return {std::move(h), std::move(out)};
}

std::pair<Graph, EdgeColoring> corona_complete(int n) {
    require(n >= 5 && (n & (n - 1)) != 0,
            "pendant-subset coloring needs n >= 5 with n not a power of two");
    int k = k_floor(n);
    Graph h = corona(generate({Family::Complete, n}));
    std::uint32_t fresh = 1u << k;
    std::vector<std::tuple<int, int, std::uint32_t>> colored;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) colored.emplace_back(u, v, fresh);
    for (int i = 0; i < n; ++i)
        colored.emplace_back(i, n + i, static_cast<std::uint32_t>(i) + 1);
    EdgeColoring out = assemble(h, k + 1, colored);
    verify_or_die(h, out, "corona_complete");
    return {std::move(h), std::move(out)};
}

EdgeColoring path_certificate(int r) {
    require(r >= 3, "path must have >= 3 vertices");
    PathColors e = path_colors(r);
    Graph g = generate({Family::Path, r});
    std::vector<std::tuple<int, int, std::uint32_t>> colored;
    for (int j = 0; j + 1 < r; ++j) colored.emplace_back(j, j + 1, e[j]);
    EdgeColoring out = assemble(g, k_floor(r), colored);
    verify_or_die(g, out, "path_certificate");
    return out;
}

EdgeColoring construct_cycle(int n) {
    require(n >= 3, "cycle must have >= 3 vertices");
    EdgeColoring out = cycle_certificate(n);
    int expected = (n == 3 || n == 7) ? k_floor(n) + 1 : k_floor(n);
    if (palette_width(out) != expected || out.palette_k != expected)
        throw std::logic_error("cycle coloring has the wrong width");
    verify_or_die(generate({Family::Cycle, n}), out, "construct_cycle");
    return out;
}

EdgeColoring construct_cubic_caterpillar(int n_spine) {
    require(n_spine >= 3, "spine must have >= 3 vertices");
    int s = n_spine;
    Graph g = generate({Family::CubicCaterpillar, s});
    Graph spine = generate({Family::Path, s});
    bool power_of_two = (s & (s - 1)) == 0;
    std::vector<std::tuple<int, int, std::uint32_t>> colored;
    int width;

    if (power_of_two) {
        PathColors e = case2_spine(s);
        width = std::bit_width(static_cast<unsigned>(s));
        EdgeColoring spine_c;
        spine_c.palette_k = width;
        for (std::uint32_t mask : e) spine_c.colors.push_back(ColorSet::from_mask(mask));
        std::vector<std::uint32_t> ind = induced_masks(spine, spine_c);
        for (std::uint32_t v : ind)
            if (!(v & 1u))
                throw std::logic_error("spine color lost the common color 1");
        if (ind[0] != 1u)
            throw std::logic_error("spine start is not colored {1}");
        for (int j = 0; j + 1 < s; ++j) colored.emplace_back(j, j + 1, e[j]);
        // pendant color = spine color minus the common color 1
        for (int i = 1; i <= s - 2; ++i)
            colored.emplace_back(i, s - 1 + i, ind[i] & ~1u);
    } else {
        EdgeColoring spine_c = path_certificate(s);
        int k = spine_c.palette_k;
        width = k + 1;
        std::vector<std::uint32_t> ind = induced_masks(spine, spine_c);
        for (int j = 0; j + 1 < s; ++j)
            colored.emplace_back(j, j + 1, spine_c.colors[j].with(k + 1).mask());
        for (int i = 1; i <= s - 2; ++i) colored.emplace_back(i, s - 1 + i, ind[i]);
    }

    EdgeColoring out = assemble(g, width, colored);
    if (width != k_floor(g.order()))
        throw std::logic_error("caterpillar coloring misses the floor width");
    verify_or_die(g, out, "construct_cubic_caterpillar");
    return out;
}

}  // namespace royal
