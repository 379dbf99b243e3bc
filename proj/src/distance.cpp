#include "graphpt/distance.hpp"

#include <algorithm>

namespace graphpt {

int DistanceMatrix::operator()(int v, int w) const {
  graph_.check_vertex(v);
  graph_.check_vertex(w);
  if (dense()) return table_[static_cast<size_t>(v) * n_ + w];
  return graph_.bfs_distances(v)[static_cast<size_t>(w)];
}

std::span<const int> DistanceMatrix::row(int v) const {
  graph_.check_vertex(v);
  if (!dense()) fail(errc::internal_error, "row() requires the dense table; use row_copy");
  return {table_.data() + static_cast<size_t>(v) * n_, static_cast<size_t>(n_)};
}

std::vector<int> DistanceMatrix::row_copy(int v) const {
  graph_.check_vertex(v);
  if (dense()) {
    auto r = row(v);
    return {r.begin(), r.end()};
  }
  return graph_.bfs_distances(v);
}

DistanceMatrix all_pairs_distances(const Graph& g, int dense_cap) {
  DistanceMatrix dm;
  dm.graph_ = g;
  dm.n_ = g.order();
  const bool dense = g.order() <= dense_cap;
  if (dense) dm.table_.resize(static_cast<size_t>(g.order()) * g.order());
  int diameter = 0;
  for (int v = 0; v < g.order(); ++v) {
    const std::vector<int> row = g.bfs_distances(v);
    diameter = std::max(diameter, *std::max_element(row.begin(), row.end()));
    if (dense) std::copy(row.begin(), row.end(), dm.table_.begin() + static_cast<size_t>(v) * g.order());
  }
  dm.diameter_ = diameter;
  return dm;
}

}  // namespace graphpt
