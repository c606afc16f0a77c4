#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "royal/graph.hpp"

namespace royal {

// Vertex numbering conventions (stable; certificates and fixtures depend on
// them):
//   path n               0-1-...-(n-1)
//   cycle n              0-1-...-(n-1)-0
//   complete n           all pairs
//   star n               center 0, leaves 1..n-1
//   hypercube k          vertices are k-bit coordinates, i ~ i^(1<<b)
//   gk k                 vertex v is the nonempty subset of {1..k} with mask
//                        v+1; edges join intersecting subsets
//   cubic_caterpillar s  spine 0..s-1, pendant of spine vertex i at s-1+i
//                        (internal spine vertices 1..s-2 only); order 2s-2
enum class Family { Path, Cycle, Complete, Star, Hypercube, Gk, CubicCaterpillar };

struct GeneratorSpec {
    Family family;
    int parameter;
};

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

Graph generate(const GeneratorSpec& spec);

Graph path_graph(int n);              // n >= 3
Graph cycle_graph(int n);             // n >= 3
Graph complete_graph(int n);          // n >= 1
Graph star_graph(int n);              // n >= 1
Graph hypercube_graph(int k);         // k >= 1
Graph gk_graph(int k);                // k >= 2; order 2^k - 1
Graph cubic_caterpillar_graph(int n_spine);  // n_spine >= 3

// G (.) K_1: one new pendant per vertex; original vertices keep their ids,
// the pendant of vertex i is n+i.
Graph corona(const Graph& g);

// G [] K_2: two copies of G (second copy shifted by n) plus the rungs
// (i, n+i).
Graph cartesian_k2(const Graph& g);

enum class SpanningStrategy { Bfs, Dfs, Random };

// Spanning tree of a connected graph. Bfs/Dfs explore from vertex 0 with
// ascending neighbor order; Random is a seeded random-order DFS from a random
// root (deterministic for a fixed seed).
Graph spanning_tree(const Graph& g, SpanningStrategy strategy, std::uint64_t seed = 0);

}  // namespace royal
