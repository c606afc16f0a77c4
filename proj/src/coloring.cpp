#include "royal/coloring.hpp"

#include <stdexcept>

namespace royal {

namespace {

void check_shape(const Graph& g, const EdgeColoring& c) {
    if (static_cast<int>(c.colors.size()) != g.size())
        throw std::invalid_argument("coloring has " + std::to_string(c.colors.size()) +
                                    " entries for a graph with " + std::to_string(g.size()) +
                                    " edges");
    if (c.palette_k < 1 || c.palette_k > ColorSet::kMaxPalette)
        throw std::invalid_argument("palette size must be in 1..16, got " +
                                    std::to_string(c.palette_k));
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " is isolated; induced colors are undefined");
}

// Per-edge checks shared by every mode.
void edge_checks(const Graph& g, const EdgeColoring& c, bool singleton,
                 std::vector<Violation>& out) {
    ColorSet palette = ColorSet::full(c.palette_k);
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges()[e];
        if (c.colors[e].empty())
            out.push_back({ViolationKind::EmptyColor, u, v});
        else if (!c.colors[e].subset_of(palette))
            out.push_back({ViolationKind::PaletteOverflow, u, v});
        if (singleton && c.colors[e].count() > 1)
            out.push_back({ViolationKind::NonSingletonEdge, u, v});
    }
}

std::vector<Violation> verify(const Graph& g, const EdgeColoring& c, bool injective,
                              bool singleton) {
    check_shape(g, c);
    std::vector<Violation> out;
    edge_checks(g, c, singleton, out);
    VertexColoring ind = induced(g, c);
    if (injective) {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                if (ind.colors[u] == ind.colors[v])
                    out.push_back({g.has_edge(u, v) ? ViolationKind::AdjacentEqual
                                                    : ViolationKind::DuplicatePair,
                                   u, v});
    } else {
        for (auto [u, v] : g.edges())
            if (ind.colors[u] == ind.colors[v])
                out.push_back({ViolationKind::AdjacentEqual, u, v});
    }
    return out;
}

}  // namespace

std::string violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::EmptyColor: return "empty-color";
        case ViolationKind::PaletteOverflow: return "palette-overflow";
        case ViolationKind::AdjacentEqual: return "adjacent-equal";
        case ViolationKind::DuplicatePair: return "duplicate-pair";
        case ViolationKind::NonSingletonEdge: return "non-singleton-edge";
    }
    return "?";
}

std::string describe(const Violation& v) {
    return violation_kind_name(v.kind) + " at (" + std::to_string(v.a) + "," +
           std::to_string(v.b) + ")";
}

VertexColoring induced(const Graph& g, const EdgeColoring& c) {
    check_shape(g, c);
    VertexColoring ind;
    ind.palette_k = c.palette_k;
    ind.colors.resize(g.order());
    for (int e = 0; e < g.size(); ++e) {
        auto [u, v] = g.edges()[e];
        ind.colors[u] |= c.colors[e];
        ind.colors[v] |= c.colors[e];
    }
    return ind;
}

std::vector<Violation> verify_royal(const Graph& g, const EdgeColoring& c) {
    return verify(g, c, /*injective=*/false, /*singleton=*/false);
}

std::vector<Violation> verify_strong_royal(const Graph& g, const EdgeColoring& c) {
    return verify(g, c, /*injective=*/true, /*singleton=*/false);
}

std::vector<Violation> verify_singleton_mode(const Graph& g, const EdgeColoring& c,
                                             bool strong) {
    return verify(g, c, strong, /*singleton=*/true);
}

int palette_width(const EdgeColoring& c) {
    int w = 0;
    for (ColorSet s : c.colors) w = std::max(w, s.max_color());
    return w;
}

}  // namespace royal
