#pragma once

#include <span>
#include <vector>

#include "graphpt/graph.hpp"

namespace graphpt {

// Exact integer all-pairs shortest-path distances. A full n-by-n table is
// stored for graphs up to dense_cap vertices; beyond that, rows are
// recomputed per source on demand (row_copy) and the random-access operator
// degrades to one BFS per call. The diameter is always computed exactly.
class DistanceMatrix {
 public:
  static constexpr int kDenseCap = 5000;

  int operator()(int v, int w) const;

  // Dense mode only.
  std::span<const int> row(int v) const;

  // Works in both modes; in lazy mode runs one BFS.
  std::vector<int> row_copy(int v) const;

  bool dense() const { return !table_.empty(); }
  int diameter() const { return diameter_; }
  int order() const { return n_; }

 private:
  friend DistanceMatrix all_pairs_distances(const Graph& g, int dense_cap);

  Graph graph_;  // retained for lazy rows
  int n_ = 0;
  int diameter_ = 0;
  std::vector<int> table_;
};

DistanceMatrix all_pairs_distances(const Graph& g, int dense_cap = DistanceMatrix::kDenseCap);

}  // namespace graphpt
