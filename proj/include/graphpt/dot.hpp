#pragma once

#include <string>

#include "graphpt/boundary.hpp"
#include "graphpt/graph.hpp"

namespace graphpt {

// DOT text with boundary vertices filled red, deterministic vertex order.
std::string dot_string(const Graph& g, const BoundarySet& boundary);

void write_dot(const Graph& g, const BoundarySet& boundary, const std::string& path);

}  // namespace graphpt
