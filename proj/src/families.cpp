#include "graphpt/families.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace graphpt {

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return build_graph(n, edges);
}

Graph cycle_graph(int n) {
  if (n < 3) fail(errc::invalid_argument, "cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return build_graph(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) edges.emplace_back(v, w);
  }
  return build_graph(n, edges);
}

Graph star_graph(int leaves) {
  if (leaves < 1) fail(errc::invalid_argument, "star needs at least 1 leaf");
  std::vector<Edge> edges;
  for (int v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return build_graph(leaves + 1, edges);
}

Graph grid_graph(int rows, int cols) {
  if (rows < 1 || cols < 1) fail(errc::invalid_argument, "empty grid");
  std::vector<Edge> edges;
  auto id = [cols](int r, int c) { return r * cols + c; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
      if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
    }
  }
  return build_graph(rows * cols, edges);
}

Graph binary_tree(int depth) {
  if (depth < 0) fail(errc::invalid_argument, "negative depth");
  const int n = (1 << (depth + 1)) - 1;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    if (2 * v + 1 < n) edges.emplace_back(v, 2 * v + 1);
    if (2 * v + 2 < n) edges.emplace_back(v, 2 * v + 2);
  }
  return build_graph(n, edges);
}

Graph random_tree(int n, RngSeed seed) {
  if (n < 1) fail(errc::empty_graph, "vertex count " + std::to_string(n));
  if (n == 1) return build_graph(1, {});
  if (n == 2) return build_graph(2, {{0, 1}});

  CounterRng rng(seed);
  std::vector<int> pruefer(static_cast<size_t>(n) - 2);
  for (int& x : pruefer) x = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n)));

  std::vector<int> degree(static_cast<size_t>(n), 1);
  for (int x : pruefer) ++degree[static_cast<size_t>(x)];

  std::set<int> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
  }

  std::vector<Edge> edges;
  for (int x : pruefer) {
    const int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, x);
    if (--degree[static_cast<size_t>(x)] == 1) leaves.insert(x);
  }
  const int a = *leaves.begin();
  const int b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return build_graph(n, edges);
}

Graph random_connected_graph(int n, double extra_edge_fraction, RngSeed seed) {
  Graph tree = random_tree(n, seed);
  if (n <= 2 || extra_edge_fraction <= 0) return tree;

  std::set<Edge> edge_set;
  for (const auto& e : tree.edges()) edge_set.insert(e);

  CounterRng rng(CounterRng::substream(seed, 0x9d2c5680));
  const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
  long long wanted = std::min<long long>(max_edges - static_cast<long long>(edge_set.size()),
                                         std::llround(extra_edge_fraction * n));
  long long attempts = 40 * std::max<long long>(wanted, 1);
  while (wanted > 0 && attempts-- > 0) {
    int u = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n)));
    int v = static_cast<int>(rng.next_below(static_cast<std::uint32_t>(n)));
    if (u == v) continue;
    const Edge e{std::min(u, v), std::max(u, v)};
    if (edge_set.insert(e).second) --wanted;
  }
  const std::vector<Edge> edges(edge_set.begin(), edge_set.end());
  return build_graph(n, edges);
}

}  // namespace graphpt
