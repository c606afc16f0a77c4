#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "royal/graph.hpp"

namespace royal {

struct Graph6Error : std::runtime_error {
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (byte offset " + std::to_string(offset) + ")"),
          offset(offset) {}
    std::size_t offset;
};

// Parse one graph6 line (optionally prefixed with the ">>graph6<<" header).
// Accepts the short form (n <= 62) and the 4-byte '~' form (n <= 258047).
// Malformed input throws Graph6Error naming the offending byte offset.
Graph parse_graph6(std::string_view line);

std::string encode_graph6(const Graph& g);

}  // namespace royal
