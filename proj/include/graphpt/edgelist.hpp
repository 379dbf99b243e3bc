#pragma once

#include <string_view>
#include <vector>

#include "graphpt/graph.hpp"

namespace graphpt {

// Graph parsed from "u v" lines; labels[i] is the original id of dense
// vertex i (identity when a "n=<int>" header fixes the vertex range).
struct ParsedEdgeList {
  Graph graph;
  std::vector<long long> labels;
};

// Whitespace-separated pairs, '#' comments, optional leading "n=<int>"
// header. Vertex labels are compacted to 0..n-1 in ascending label order.
ParsedEdgeList parse_edgelist(std::string_view text);

}  // namespace graphpt
