#include "royal/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace royal {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph order must be non-negative");
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge in edge list");
    edges_ = std::move(edges);
    adj_.resize(n_);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

namespace {

// Distances from src by BFS; -1 for unreachable.
std::vector<int> bfs_dist(const Graph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u))
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
    }
    return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
    if (g.order() == 0) return false;
    auto dist = bfs_dist(g, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

Metrics metrics(const Graph& g) {
    Metrics m;
    m.order = g.order();
    m.size = g.size();
    if (g.order() == 0) return m;
    m.min_degree = g.degree(0);
    m.max_degree = g.degree(0);
    for (int v = 1; v < g.order(); ++v) {
        m.min_degree = std::min(m.min_degree, g.degree(v));
        m.max_degree = std::max(m.max_degree, g.degree(v));
    }
    m.connected = is_connected(g);
    if (m.connected) {
        int diam = 0;
        for (int v = 0; v < g.order(); ++v) {
            auto dist = bfs_dist(g, v);
            diam = std::max(diam, *std::max_element(dist.begin(), dist.end()));
        }
        m.diameter = diam;
    }
    return m;
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(g.order(), std::move(edges));
}

}  // namespace royal
