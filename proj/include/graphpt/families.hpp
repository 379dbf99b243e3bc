#pragma once

#include "graphpt/graph.hpp"
#include "graphpt/rng.hpp"

namespace graphpt {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);
Graph grid_graph(int rows, int cols);

// Complete binary tree; depth 0 is the lone root, depth d has 2^(d+1)-1
// vertices. Children of i are 2i+1 and 2i+2.
Graph binary_tree(int depth);

// Uniform random labelled tree (random Pruefer sequence).
Graph random_tree(int n, RngSeed seed);

// Random spanning tree plus roughly extra_edge_fraction * n further edges;
// connected by construction.
Graph random_connected_graph(int n, double extra_edge_fraction, RngSeed seed);

}  // namespace graphpt
