#include "graphpt/graph.hpp"

#include <algorithm>
#include <queue>

namespace graphpt {

const char* errc_name(errc code) {
  switch (code) {
    case errc::empty_graph: return "EmptyGraph";
    case errc::vertex_out_of_range: return "VertexOutOfRange";
    case errc::self_loop: return "SelfLoop";
    case errc::duplicate_edge: return "DuplicateEdge";
    case errc::disconnected: return "Disconnected";
    case errc::degenerate_graph: return "DegenerateGraph";
    case errc::invalid_witness: return "InvalidWitness";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::invalid_argument: return "InvalidArgument";
    case errc::empty_absorbing_set: return "EmptyAbsorbingSet";
    case errc::walk_cap_exceeded: return "WalkCapExceeded";
    case errc::empty_x: return "EmptyX";
    case errc::x_covers_all_vertices: return "XCoversAllVertices";
    case errc::zero_function: return "ZeroFunction";
    case errc::spectrum_too_large: return "SpectrumTooLarge";
    case errc::w_undefined_where_f_nonzero: return "WUndefinedWhereFNonzero";
    case errc::f_not_vanishing_on_boundary: return "FNotVanishingOnBoundary";
    case errc::interior_empty: return "InteriorEmpty";
    case errc::not_a_measure: return "NotAMeasure";
    case errc::vertex_in_boundary: return "VertexInBoundary";
    case errc::kernel_not_admissible: return "KernelNotAdmissible";
    case errc::non_termination: return "NonTermination";
    case errc::parse_error: return "ParseError";
    case errc::bad_length: return "BadChecksumLength";
    case errc::non_printable_byte: return "NonPrintableByte";
    case errc::disconnected_after_parse: return "DisconnectedAfterParse";
    case errc::io_error: return "IoError";
    case errc::internal_error: return "InternalError";
  }
  return "UnknownError";
}

Graph build_graph(int n, std::span<const Edge> edges) {
  if (n <= 0) fail(errc::empty_graph, "vertex count " + std::to_string(n));

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n) fail(errc::vertex_out_of_range, "vertex " + std::to_string(u));
    if (v < 0 || v >= n) fail(errc::vertex_out_of_range, "vertex " + std::to_string(v));
    if (u == v) fail(errc::self_loop, "vertex " + std::to_string(u));
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  for (size_t i = 1; i < normalized.size(); ++i) {
    if (normalized[i] == normalized[i - 1]) {
      fail(errc::duplicate_edge, "edge (" + std::to_string(normalized[i].first) + "," +
                                     std::to_string(normalized[i].second) + ")");
    }
  }

  Graph g;
  g.n_ = n;
  g.m_ = static_cast<int>(normalized.size());
  g.offsets_.assign(static_cast<size_t>(n) + 1, 0);
  for (const auto& [u, v] : normalized) {
    ++g.offsets_[static_cast<size_t>(u) + 1];
    ++g.offsets_[static_cast<size_t>(v) + 1];
  }
  for (int v = 0; v < n; ++v) g.offsets_[static_cast<size_t>(v) + 1] += g.offsets_[v];
  g.adj_.resize(2 * normalized.size());
  std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const auto& [u, v] : normalized) {
    g.adj_[static_cast<size_t>(cursor[u]++)] = v;
    g.adj_[static_cast<size_t>(cursor[v]++)] = u;
  }
  for (int v = 0; v < n; ++v) {
    std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[static_cast<size_t>(v) + 1]);
  }

  const std::vector<int> dist = g.bfs_distances(0);
  for (int v = 0; v < n; ++v) {
    if (dist[v] < 0) fail(errc::disconnected, "vertex " + std::to_string(v) + " unreachable from 0");
  }
  return g;
}

std::pair<int, int> Graph::degree_extremes() const {
  int lo = n_, hi = 0;
  for (int v = 0; v < n_; ++v) {
    lo = std::min(lo, degree(v));
    hi = std::max(hi, degree(v));
  }
  return {lo, hi};
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<size_t>(m_));
  for (int v = 0; v < n_; ++v) {
    for (int w : neighbors(v)) {
      if (w > v) out.emplace_back(v, w);
    }
  }
  return out;
}

std::vector<int> Graph::bfs_distances(int source) const {
  check_vertex(source);
  std::vector<int> dist(static_cast<size_t>(n_), -1);
  std::vector<int> queue;
  queue.reserve(static_cast<size_t>(n_));
  dist[static_cast<size_t>(source)] = 0;
  queue.push_back(source);
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    for (int w : neighbors(v)) {
      if (dist[static_cast<size_t>(w)] < 0) {
        dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> sorted_vertex_set(const Graph& g, std::span<const int> vertices) {
  std::vector<int> out(vertices.begin(), vertices.end());
  for (int v : out) g.check_vertex(v);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<char> vertex_mask(const Graph& g, std::span<const int> vertices) {
  std::vector<char> mask(static_cast<size_t>(g.order()), 0);
  for (int v : vertices) {
    g.check_vertex(v);
    mask[static_cast<size_t>(v)] = 1;
  }
  return mask;
}

}  // namespace graphpt
