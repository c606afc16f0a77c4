#pragma once

#include <utility>
#include <vector>

#include "royal/coloring.hpp"
#include "royal/graph.hpp"

namespace royal {

// The width-k host graph: one vertex per nonempty subset of {1..k} (vertex v
// carries the label with bitmask v+1), adjacent iff the labels intersect.
struct GkGraph {
    int k;
    Graph graph;
    VertexColoring labels;
    // partition[i-1] lists the vertices whose label has cardinality i;
    // |partition[i-1]| = C(k, i).
    std::vector<std::vector<int>> partition;
    // Canonical certificate c(uv) = label(u) & label(v); its induced coloring
    // is exactly `labels`.
    EdgeColoring certificate;
};

// Build the host graph for 2 <= k <= 10.
GkGraph gk_build(int k);

// Degree of any host-graph vertex whose label has cardinality i:
// (2^i - 1) * 2^(k-i) - 1. Requires 1 <= i <= k.
int gk_degree(int k, int i);

// c(uv) = labels(u) & labels(v) on every edge; throws if an adjacent pair of
// labels fails to intersect or a label is empty. When every label is also
// covered by its neighbors' union, the induced coloring reproduces `labels`.
EdgeColoring intersection_coloring(const Graph& g, const VertexColoring& labels);

// Widen a strong royal coloring of g (width k) to one of the derived graph
// (width k+1): original edges gain color k+1, each new edge copies an induced
// color, so old vertices keep their color plus k+1 and new vertices replicate
// the old colors. Both throw if c is not a valid strong royal coloring of g.
std::pair<Graph, EdgeColoring> lift_corona(const Graph& g, const EdgeColoring& c);
std::pair<Graph, EdgeColoring> lift_cartesian_k2(const Graph& g, const EdgeColoring& c);

// The pendant-subset coloring of corona(K_n): pendant edge i gets the i-th
// nonempty subset of {1..k} in ascending mask order, every clique edge gets
// {k+1}, where k = k_floor(n). Valid for n >= 5 with n not a power of two.
std::pair<Graph, EdgeColoring> corona_complete(int n);

// Strong royal coloring of the path P_r (r >= 3) of width k_floor(r).
// Bases r <= 15 are derived by exhaustive lexicographic search (for r >= 7
// constrained to contain the insertion hook: consecutive edge colors
// {1,2},{2},{2} away from both ends); longer paths double a half-length base
// (mirror the colors, add the fresh top color on the mirrored half, join the
// halves by repeating the last base color) and odd lengths append one
// fresh-color edge. Memoized; thread-safe.
EdgeColoring path_certificate(int r);

// Strong royal coloring of the cycle C_n (n >= 3) of width k_floor(n), except
// widths 3 and 4 at n = 3 and n = 7. Bases n <= 13 come from the exact
// solver; even n >= 14 closes a doubled path into a cycle; odd n >= 15 opens
// the mirrored copy of the hook in C_{n-1} and splices in one vertex whose
// two edges carry the top color (so its induced color is exactly {k}, a color
// no other vertex has). The hook's structure is asserted before splicing.
EdgeColoring construct_cycle(int n);

// Strong royal coloring of cubic_caterpillar(n_spine), n_spine >= 3, of width
// k_floor(2*n_spine - 2) — always the minimum. When n_spine is a power of
// two the spine gets the all-colors-contain-1 doubling scheme and pendant i
// gets the spine color minus {1}; otherwise the spine-path coloring is lifted
// corona-style (spine edges gain the fresh color, pendants copy induced
// colors).
EdgeColoring construct_cubic_caterpillar(int n_spine);

}  // namespace royal
