#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphpt/graph.hpp"
#include "graphpt/rational.hpp"

namespace graphpt {

// One analyzed graph. Every bound field either satisfies its inequality or
// the violation is listed in `violations`; violations never abort a scan.
struct ScanRecord {
  long long id = 0;
  std::string source;  // "file:line"

  int n = 0;
  int edge_count = 0;
  int diameter = 0;
  int mindeg = 0;
  int maxdeg = 0;

  int boundary_size = 0;
  long long iso_lhs = 0;
  Rational iso_rhs;
  bool iso_holds = false;

  bool interior_empty = false;

  double max_phi = 0;
  double exit_time_bound = 0;  // maxdeg * diam^2

  std::optional<double> lambda1;
  double faber_krahn_bound = 0;

  std::optional<double> hardy_certificate;

  std::optional<double> abp_sharp_constant;
  double abp_bound = 0;

  std::string hotspots_verdict;
  double lambda2 = 0;
  int lambda2_multiplicity = 1;
  bool ratio_applicable = false;
  std::optional<double> hotspots_ratio;
  std::optional<double> hotspots_ratio_log_bound;

  std::vector<std::string> violations;
};

struct ScanSummary {
  long long scanned = 0;
  long long skipped = 0;
  long long hotspots_holds = 0;
  long long hotspots_violated = 0;
  long long hotspots_degenerate = 0;
  double hotspots_violation_rate = 0;
  std::map<std::string, long long> violation_counts;
  std::vector<std::string> violation_list;  // "source: kind"
  std::vector<std::string> skipped_list;    // "source: reason"
};

struct ScanResult {
  std::vector<ScanRecord> records;
  ScanSummary summary;
};

struct ScanOptions {
  int workers = 1;
  std::uint64_t seed = 0;  // reserved; the scan itself samples nothing
};

// Full per-graph analysis (id/source left to the caller).
ScanRecord analyze_graph(const Graph& g);

// Scans graph6 lines given as (source, line) pairs. Records are emitted in
// input order regardless of worker count.
ScanResult scan_lines(const std::vector<std::pair<std::string, std::string>>& lines,
                      const ScanOptions& options);

// Reads graph6 files and/or directories of files (sorted by name).
ScanResult scan_corpus(const std::vector<std::string>& paths, const ScanOptions& options);

// Deterministic report emitters: byte-identical for identical results.
std::string scan_to_json(const ScanResult& result);
std::string scan_to_csv(const ScanResult& result);

}  // namespace graphpt
