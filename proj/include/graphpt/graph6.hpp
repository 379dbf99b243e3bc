#pragma once

#include <string>
#include <string_view>

#include "graphpt/graph.hpp"

namespace graphpt {

// One graph6-encoded graph (McKay format): 6-bit printable encoding of the
// upper adjacency triangle, column-major. Short form for n <= 62, the
// 4-byte long form beyond. The parsed graph must be connected.
Graph parse_graph6(std::string_view line);

std::string encode_graph6(const Graph& g);

}  // namespace graphpt
