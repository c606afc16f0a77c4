#pragma once

#include <functional>
#include <vector>

#include "royal/graph.hpp"

namespace royal {

// Stream every unlabeled free tree of the given order, one representative per
// isomorphism class, in a deterministic order. Implemented with canonical
// level sequences and a constant-amortized-time successor step, so the order
// n! blowup of labeled enumeration never appears. Orders up to 18 are
// accepted (123867 trees); beyond that the stream gets impractically long.
void for_each_free_tree(int order, const std::function<void(const Graph&)>& fn);

std::vector<Graph> all_free_trees(int order);

// Number of isomorphism classes streamed, without building graphs.
long long count_free_trees(int order);

}  // namespace royal
