#include "royal/generators.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

namespace royal {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::Star: return "star";
        case Family::Hypercube: return "hypercube";
        case Family::Gk: return "gk";
        case Family::CubicCaterpillar: return "cubic_caterpillar";
    }
    return "?";
}

std::optional<Family> parse_family(const std::string& name) {
    if (name == "path") return Family::Path;
    if (name == "cycle") return Family::Cycle;
    if (name == "complete") return Family::Complete;
    if (name == "star") return Family::Star;
    if (name == "hypercube") return Family::Hypercube;
    if (name == "gk") return Family::Gk;
    if (name == "cubic_caterpillar" || name == "caterpillar") return Family::CubicCaterpillar;
    return std::nullopt;
}

Graph generate(const GeneratorSpec& spec) {
    switch (spec.family) {
        case Family::Path: return path_graph(spec.parameter);
        case Family::Cycle: return cycle_graph(spec.parameter);
        case Family::Complete: return complete_graph(spec.parameter);
        case Family::Star: return star_graph(spec.parameter);
        case Family::Hypercube: return hypercube_graph(spec.parameter);
        case Family::Gk: return gk_graph(spec.parameter);
        case Family::CubicCaterpillar: return cubic_caterpillar_graph(spec.parameter);
    }
    throw std::invalid_argument("unknown generator family");
}

Graph path_graph(int n) {
    require(n >= 3, "path order must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle order must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete order must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph star_graph(int n) {
    require(n >= 1, "star order must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, std::move(edges));
}

Graph hypercube_graph(int k) {
    require(k >= 1 && k <= 20, "hypercube dimension must be in 1..20");
    int n = 1 << k;
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < k; ++b)
            if (!(v >> b & 1)) edges.emplace_back(v, v | (1 << b));
    return Graph(n, std::move(edges));
}

Graph gk_graph(int k) {
    require(k >= 2 && k <= 16, "gk parameter must be in 2..16");
    int n = (1 << k) - 1;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if ((u + 1) & (v + 1)) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph cubic_caterpillar_graph(int n_spine) {
    require(n_spine >= 3, "caterpillar spine must have >= 3 vertices");
    int n = 2 * n_spine - 2;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n_spine; ++i) edges.emplace_back(i, i + 1);
    for (int i = 1; i <= n_spine - 2; ++i) edges.emplace_back(i, n_spine - 1 + i);
    return Graph(n, std::move(edges));
}

Graph corona(const Graph& g) {
    int n = g.order();
    auto edges = g.edges();
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    return Graph(2 * n, std::move(edges));
}

Graph cartesian_k2(const Graph& g) {
    int n = g.order();
    auto edges = g.edges();
    for (auto [u, v] : g.edges()) edges.emplace_back(n + u, n + v);
    for (int i = 0; i < n; ++i) edges.emplace_back(i, n + i);
    return Graph(2 * n, std::move(edges));
}

Graph spanning_tree(const Graph& g, SpanningStrategy strategy, std::uint64_t seed) {
    require(g.order() >= 1, "spanning tree needs a non-empty graph");
    int n = g.order();
    std::vector<char> seen(n, 0);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);

    if (strategy == SpanningStrategy::Bfs) {
        std::vector<int> queue{0};
        seen[0] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int w : g.neighbors(u))
                if (!seen[w]) {
                    seen[w] = 1;
                    edges.emplace_back(u, w);
                    queue.push_back(w);
                }
        }
    } else {
        std::mt19937_64 rng(seed);
        int root = 0;
        if (strategy == SpanningStrategy::Random)
            root = static_cast<int>(rng() % n);
        std::vector<int> stack{root};
        seen[root] = 1;
        // Iterative DFS; for Random the neighbor order is shuffled on first
        // touch of each vertex.
        std::vector<std::vector<int>> visit_order(n);
        std::vector<std::size_t> cursor(n, 0);
        std::vector<char> touched(n, 0);
        while (!stack.empty()) {
            int u = stack.back();
            if (!touched[u]) {
                touched[u] = 1;
                visit_order[u] = g.neighbors(u);
                if (strategy == SpanningStrategy::Random)
                    std::shuffle(visit_order[u].begin(), visit_order[u].end(), rng);
            }
            if (cursor[u] == visit_order[u].size()) {
                stack.pop_back();
                continue;
            }
            int w = visit_order[u][cursor[u]++];
            if (!seen[w]) {
                seen[w] = 1;
                edges.emplace_back(u, w);
                stack.push_back(w);
            }
        }
    }

    if (static_cast<int>(edges.size()) != n - 1)
        throw std::invalid_argument("spanning tree requires a connected graph");
    return Graph(n, std::move(edges));
}

}  // namespace royal
