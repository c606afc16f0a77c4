#pragma once

#include <string>
#include <utility>

#include "royal/coloring.hpp"
#include "royal/graph.hpp"

namespace royal {

// Certificates travel as JSON:
//   { "n": 4, "k": 3, "edges": [[0, 1, [1]], [1, 2, [1, 2]], ...] }
// with color lists sorted ascending and edges in the graph's edge order. The
// edge list pins down the graph, so a certificate file is self-contained.
std::string certificate_to_json(const Graph& g, const EdgeColoring& c);

struct ParsedCertificate {
    Graph graph;
    EdgeColoring coloring;
};

// Throws std::invalid_argument on schema violations (wrong types, color out
// of 1..16, k out of range, duplicate edges, ...).
ParsedCertificate certificate_from_json(const std::string& text);

// Graphviz rendering: vertices carry their induced color, edges their color
// set.
std::string certificate_to_dot(const Graph& g, const EdgeColoring& c);

}  // namespace royal
