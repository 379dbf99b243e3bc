#include "graphpt/boundary.hpp"

#include <algorithm>

namespace graphpt {

bool is_witnessed(const Graph& g, const DistanceMatrix& dist, int v, int w) {
  g.check_vertex(v);
  g.check_vertex(w);
  if (v == w) fail(errc::invalid_witness, "witness equals vertex " + std::to_string(v));
  const long long dvw = dist(v, w);
  long long neighbor_sum = 0;
  for (int x : g.neighbors(v)) neighbor_sum += dist(x, w);
  return static_cast<long long>(g.degree(v)) * dvw > neighbor_sum;
}

namespace {

// Witness test against one distance row, avoiding repeated lookups.
bool witnessed_by_row(const Graph& g, std::span<const int> dist_w, int v) {
  const long long dvw = dist_w[static_cast<size_t>(v)];
  long long neighbor_sum = 0;
  for (int x : g.neighbors(v)) neighbor_sum += dist_w[static_cast<size_t>(x)];
  return static_cast<long long>(g.degree(v)) * dvw > neighbor_sum;
}

}  // namespace

BoundarySet boundary_set(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.order();
  BoundarySet out;
  out.witness.assign(static_cast<size_t>(n), -1);
  std::vector<int> row_storage;
  for (int w = 0; w < n; ++w) {
    std::span<const int> row_w;
    if (dist.dense()) {
      row_w = dist.row(w);
    } else {
      row_storage = dist.row_copy(w);
      row_w = row_storage;
    }
    for (int v = 0; v < n; ++v) {
      if (v == w || out.witness[static_cast<size_t>(v)] >= 0) continue;
      // Recorded witness must be the smallest; scanning w ascending keeps
      // the first hit minimal.
      if (witnessed_by_row(g, row_w, v)) out.witness[static_cast<size_t>(v)] = w;
    }
  }
  for (int v = 0; v < n; ++v) {
    if (out.witness[static_cast<size_t>(v)] >= 0) out.members.push_back(v);
  }
  return out;
}

std::vector<int> boundary_via_levels(const Graph& g, const DistanceMatrix& dist) {
  const int n = g.order();
  std::vector<char> member(static_cast<size_t>(n), 0);
  std::vector<int> row_storage;
  for (int w = 0; w < n; ++w) {
    std::span<const int> row_w;
    if (dist.dense()) {
      row_w = dist.row(w);
    } else {
      row_storage = dist.row_copy(w);
      row_w = row_storage;
    }
    for (int v = 0; v < n; ++v) {
      if (v == w || member[static_cast<size_t>(v)]) continue;
      const int level = row_w[static_cast<size_t>(v)];
      int closer = 0, farther = 0;
      for (int x : g.neighbors(v)) {
        const int lx = row_w[static_cast<size_t>(x)];
        if (lx == level - 1) ++closer;
        else if (lx == level + 1) ++farther;
      }
      if (closer > farther) member[static_cast<size_t>(v)] = 1;
    }
  }
  std::vector<int> out;
  for (int v = 0; v < n; ++v) {
    if (member[static_cast<size_t>(v)]) out.push_back(v);
  }
  return out;
}

bool interior_check(const Graph& g, const DistanceMatrix& dist, int v) {
  g.check_vertex(v);
  const int n = g.order();
  for (int w = 0; w < n; ++w) {
    if (w == v) continue;
    const int dvw = dist(v, w);
    int closer = 0, farther = 0;
    for (int x : g.neighbors(v)) {
      const int dxw = dist(x, w);
      if (dxw < dvw) ++closer;
      else if (dxw > dvw) ++farther;
    }
    if (farther < closer) return false;
  }
  return true;
}

LevelPartition make_level_partition(const Graph& g, const DistanceMatrix& dist, int root) {
  g.check_vertex(root);
  const std::vector<int> row = dist.row_copy(root);
  const int ecc = *std::max_element(row.begin(), row.end());
  LevelPartition lp;
  lp.root = root;
  lp.levels.resize(static_cast<size_t>(ecc) + 1);
  for (int v = 0; v < g.order(); ++v) lp.levels[static_cast<size_t>(row[static_cast<size_t>(v)])].push_back(v);
  return lp;
}

IsoperimetricReport isoperimetric_report(const Graph& g, const DistanceMatrix& dist,
                                         const BoundarySet& boundary) {
  if (dist.diameter() == 0) fail(errc::degenerate_graph, "diameter 0");
  const auto [mindeg, maxdeg] = g.degree_extremes();
  (void)mindeg;
  IsoperimetricReport report;
  report.lhs = boundary.size();
  report.rhs = Rational(g.order(), 2LL * maxdeg * dist.diameter());
  report.holds = Rational(report.lhs) >= report.rhs;
  return report;
}

}  // namespace graphpt
