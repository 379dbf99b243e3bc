#include "graphpt/edgelist.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <string>

namespace graphpt {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_fail(int line_no, const std::string& message) {
  fail(errc::parse_error, "line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

ParsedEdgeList parse_edgelist(std::string_view text) {
  std::vector<std::pair<long long, long long>> raw_edges;
  long long header_n = -1;
  bool saw_edge = false;

  int line_no = 0;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos
                                                                             : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    const size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;

    if (line.starts_with("n=")) {
      if (saw_edge) parse_fail(line_no, "header after edges");
      if (header_n >= 0) parse_fail(line_no, "duplicate header");
      const std::string_view value = line.substr(2);
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), header_n);
      if (ec != std::errc{} || ptr != value.data() + value.size() || header_n <= 0) {
        parse_fail(line_no, "bad header");
      }
      continue;
    }

    std::istringstream fields{std::string(line)};
    long long u = 0, v = 0;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra)) parse_fail(line_no, "expected 'u v'");
    if (u < 0 || v < 0) parse_fail(line_no, "negative vertex id");
    raw_edges.emplace_back(u, v);
    saw_edge = true;
  }

  ParsedEdgeList out;
  std::vector<Edge> edges;
  if (header_n >= 0) {
    for (auto [u, v] : raw_edges) {
      if (u >= header_n || v >= header_n) {
        fail(errc::vertex_out_of_range, "vertex " + std::to_string(std::max(u, v)) +
                                            " with n=" + std::to_string(header_n));
      }
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    out.labels.resize(static_cast<size_t>(header_n));
    for (long long v = 0; v < header_n; ++v) out.labels[static_cast<size_t>(v)] = v;
    out.graph = build_graph(static_cast<int>(header_n), edges);
    return out;
  }

  if (raw_edges.empty()) fail(errc::empty_graph, "no edges and no header");
  std::map<long long, int> compact;
  for (auto [u, v] : raw_edges) {
    compact.emplace(u, 0);
    compact.emplace(v, 0);
  }
  out.labels.reserve(compact.size());
  for (auto& [label, id] : compact) {
    id = static_cast<int>(out.labels.size());
    out.labels.push_back(label);
  }
  for (auto [u, v] : raw_edges) edges.emplace_back(compact[u], compact[v]);
  out.graph = build_graph(static_cast<int>(compact.size()), edges);
  return out;
}

}  // namespace graphpt
