#pragma once

#include <string>
#include <vector>

#include "graphpt/boundary.hpp"
#include "graphpt/graph.hpp"
#include "graphpt/rng.hpp"

namespace graphpt::testsupport {

struct NamedGraph {
  std::string name;
  Graph graph;
};

// The fixed verification corpus: paths, cycles, complete graphs, stars,
// grids, binary trees, the Petersen graph and seeded random trees and
// connected graphs. Largest member is the 10x10 grid.
std::vector<NamedGraph> standard_corpus();

Graph petersen_graph();

// Uniform [-1, 1] entries.
std::vector<double> random_function(int n, CounterRng& rng);

// Uniform [-1, 1] on the interior, exact zeros on the boundary.
std::vector<double> random_interior_function(const Graph& g, const BoundarySet& boundary,
                                             CounterRng& rng);

}  // namespace graphpt::testsupport
