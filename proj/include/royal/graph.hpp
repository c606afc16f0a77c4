#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace royal {

// Simple undirected graph on vertices 0..n-1, immutable once built. Edges are
// kept sorted with u < v, so an edge list index is a stable key — edge
// colorings elsewhere are vectors parallel to edges().
class Graph {
public:
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    // Neighbor lists are sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }

    bool has_edge(int u, int v) const;
    // Index into edges() for {u,v} in either orientation; -1 if absent.
    int edge_index(int u, int v) const;

    bool operator==(const Graph&) const = default;

private:
    int n_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

struct Metrics {
    int order = 0;
    int size = 0;
    int min_degree = 0;
    int max_degree = 0;
    bool connected = false;
    // Empty when the graph is disconnected (or empty).
    std::optional<int> diameter;
};

Metrics metrics(const Graph& g);
bool is_connected(const Graph& g);
Graph complement(const Graph& g);

}  // namespace royal
