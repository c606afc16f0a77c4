#pragma once

#include <string>
#include <vector>

#include "royal/color_set.hpp"
#include "royal/graph.hpp"

namespace royal {

// Assignment of a nonempty color set to every edge, parallel to g.edges().
// palette_k records the palette {1..k} the coloring is judged against.
struct EdgeColoring {
    int palette_k = 0;
    std::vector<ColorSet> colors;
};

// Color set per vertex (usually the induced coloring: union over incident
// edges, or a solver's vertex labeling).
struct VertexColoring {
    int palette_k = 0;
    std::vector<ColorSet> colors;
};

enum class ViolationKind {
    EmptyColor,        // an edge carries the empty set
    PaletteOverflow,   // an edge uses a color above palette_k
    AdjacentEqual,     // adjacent vertices get the same induced color
    DuplicatePair,     // non-adjacent vertices get the same induced color
    NonSingletonEdge,  // singleton mode only: an edge carries >= 2 colors
};

// a,b are the two endpoints involved: the edge for per-edge kinds, the
// clashing vertex pair otherwise (always a < b).
struct Violation {
    ViolationKind kind;
    int a = 0;
    int b = 0;
};

std::string violation_kind_name(ViolationKind k);
std::string describe(const Violation& v);

// Union of incident edge colors per vertex. Throws if the coloring does not
// match the graph's edge count or the graph has an isolated vertex (whose
// induced color would be meaningless).
VertexColoring induced(const Graph& g, const EdgeColoring& c);

// All violations, deterministically ordered: per-edge checks in edge order,
// then vertex-pair checks in lexicographic order. Empty result == valid.
// verify_royal demands a proper induced coloring; verify_strong_royal demands
// an injective one (adjacent clashes reported as adjacent-equal, the rest as
// duplicate-pair).
std::vector<Violation> verify_royal(const Graph& g, const EdgeColoring& c);
std::vector<Violation> verify_strong_royal(const Graph& g, const EdgeColoring& c);

// Same checks as the chosen base mode plus the restriction that every edge
// carries exactly one color.
std::vector<Violation> verify_singleton_mode(const Graph& g, const EdgeColoring& c,
                                             bool strong);

// Largest color actually used on any edge (0 for an edgeless coloring).
int palette_width(const EdgeColoring& c);

}  // namespace royal
