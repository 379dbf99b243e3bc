#include "graphpt/dot.hpp"

#include <fstream>
#include <sstream>

namespace graphpt {

std::string dot_string(const Graph& g, const BoundarySet& boundary) {
  std::ostringstream out;
  out << "graph G {\n";
  out << "  node [shape=circle];\n";
  for (int v = 0; v < g.order(); ++v) {
    if (boundary.contains(v)) {
      out << "  " << v << " [style=filled, fillcolor=red];\n";
    } else {
      out << "  " << v << ";\n";
    }
  }
  for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

void write_dot(const Graph& g, const BoundarySet& boundary, const std::string& path) {
  std::ofstream file(path);
  if (!file) fail(errc::io_error, "cannot open " + path);
  file << dot_string(g, boundary);
  if (!file) fail(errc::io_error, "write failed for " + path);
}

}  // namespace graphpt
