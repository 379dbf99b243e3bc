#pragma once

#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "graphpt/error.hpp"

namespace graphpt {

using Edge = std::pair<int, int>;

// Immutable simple connected undirected graph on dense vertex ids 0..n-1.
// Adjacency lists are sorted; construction validates simplicity and
// connectivity. Safe to share across threads after construction.
class Graph {
 public:
  int order() const { return n_; }
  int edge_count() const { return m_; }

  int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  // (min degree, max degree)
  std::pair<int, int> degree_extremes() const;

  // Edges as (u, v) with u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  // Exact BFS distances from source.
  std::vector<int> bfs_distances(int source) const;

  void check_vertex(int v) const {
    if (v < 0 || v >= n_) fail(errc::vertex_out_of_range, "vertex " + std::to_string(v));
  }

 private:
  friend Graph build_graph(int n, std::span<const Edge> edges);

  int n_ = 0;
  int m_ = 0;
  std::vector<int> offsets_;
  std::vector<int> adj_;
};

Graph build_graph(int n, std::span<const Edge> edges);

inline Graph build_graph(int n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline Graph build_graph(int n, const std::vector<Edge>& edges) {
  return build_graph(n, std::span<const Edge>(edges.data(), edges.size()));
}

// Sorted, deduplicated copy of `vertices`, all validated against g.
std::vector<int> sorted_vertex_set(const Graph& g, std::span<const int> vertices);

// Characteristic mask of a vertex set.
std::vector<char> vertex_mask(const Graph& g, std::span<const int> vertices);

}  // namespace graphpt
