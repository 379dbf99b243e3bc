#include "graphpt/scan.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <thread>

#include "graphpt/abp.hpp"
#include "graphpt/boundary.hpp"
#include "graphpt/distance.hpp"
#include "graphpt/graph6.hpp"
#include "graphpt/hardy.hpp"
#include "graphpt/spectral.hpp"
#include "graphpt/walks.hpp"
#include "json.hpp"

namespace graphpt {

ScanRecord analyze_graph(const Graph& g) {
  ScanRecord rec;
  rec.n = g.order();
  rec.edge_count = g.edge_count();
  const DistanceMatrix dist = all_pairs_distances(g);
  rec.diameter = dist.diameter();
  const auto [mindeg, maxdeg] = g.degree_extremes();
  rec.mindeg = mindeg;
  rec.maxdeg = maxdeg;

  const BoundarySet boundary = boundary_set(g, dist);
  rec.boundary_size = boundary.size();
  rec.interior_empty = boundary.size() == g.order();

  const IsoperimetricReport iso = isoperimetric_report(g, dist, boundary);
  rec.iso_lhs = iso.lhs;
  rec.iso_rhs = iso.rhs;
  rec.iso_holds = iso.holds;
  if (!iso.holds) rec.violations.push_back("isoperimetric");

  const HittingPotential phi = hitting_potential(g, boundary.members);
  rec.max_phi = phi.max();
  rec.exit_time_bound = static_cast<double>(maxdeg) * rec.diameter * rec.diameter;
  if (rec.max_phi > rec.exit_time_bound * (1 + 1e-9) + 1e-9) rec.violations.push_back("exit_time");

  const FaberKrahnReport fk = faber_krahn_report(g, dist, boundary);
  rec.lambda1 = fk.lambda1;
  rec.faber_krahn_bound = fk.bound;
  if (!fk.holds) rec.violations.push_back("faber_krahn");

  if (!rec.interior_empty) {
    rec.hardy_certificate = hardy_certificate(g, boundary, phi);
    if (*rec.hardy_certificate < -1e-8) rec.violations.push_back("hardy");

    rec.abp_sharp_constant = abp_sharp_constant(g, boundary.members);
    rec.abp_bound = 2.0 * maxdeg / mindeg * rec.diameter * rec.diameter;
    if (*rec.abp_sharp_constant > rec.abp_bound + 1e-6) rec.violations.push_back("abp");
  } else {
    rec.abp_bound = 2.0 * maxdeg / mindeg * rec.diameter * rec.diameter;
  }

  const HotspotsReport hotspots = hotspots_report(g, boundary);
  rec.hotspots_verdict = to_string(hotspots.overall);
  rec.lambda2 = hotspots.lambda2;
  rec.lambda2_multiplicity = hotspots.multiplicity;

  const HotspotsRatioCheck ratio = hotspots_ratio_check(g, dist, boundary);
  rec.ratio_applicable = ratio.applicable;
  if (ratio.applicable) {
    rec.hotspots_ratio = ratio.ratio;
    rec.hotspots_ratio_log_bound = ratio.log_bound;
    if (!ratio.holds) rec.violations.push_back("eigenvector_ratio");
  }
  return rec;
}

namespace {

struct LineOutcome {
  bool ok = false;
  ScanRecord record;
  std::string skip_reason;
};

bool skippable(errc code) {
  switch (code) {
    case errc::parse_error:
    case errc::bad_length:
    case errc::non_printable_byte:
    case errc::disconnected_after_parse:
      return true;
    default:
      return false;
  }
}

LineOutcome process_line(const std::string& source, const std::string& text) {
  LineOutcome out;
  Graph g;
  try {
    g = parse_graph6(text);
  } catch (const Error& e) {
    if (!skippable(e.code())) throw;
    out.skip_reason = e.what();
    return out;
  }
  if (g.order() < 2) {
    out.skip_reason = "degenerate graph (n=1)";
    return out;
  }
  out.ok = true;
  out.record = analyze_graph(g);
  out.record.source = source;
  return out;
}

}  // namespace

ScanResult scan_lines(const std::vector<std::pair<std::string, std::string>>& lines,
                      const ScanOptions& options) {
  const size_t count = lines.size();
  std::vector<LineOutcome> outcomes(count);
  std::vector<std::exception_ptr> errors(count);

  const int workers = std::max(1, std::min<int>(options.workers, static_cast<int>(count)));
  std::atomic<size_t> cursor{0};
  auto run = [&]() {
    for (;;) {
      const size_t i = cursor.fetch_add(1);
      if (i >= count) return;
      try {
        outcomes[i] = process_line(lines[i].first, lines[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  // Re-sequenced fold: output order equals input order at any worker count.
  ScanResult result;
  for (auto& outcome : outcomes) {
    if (!outcome.ok) {
      ++result.summary.skipped;
      result.summary.skipped_list.push_back(outcome.skip_reason);
      continue;
    }
    outcome.record.id = static_cast<long long>(result.records.size());
    ++result.summary.scanned;
    if (outcome.record.hotspots_verdict == "Holds") ++result.summary.hotspots_holds;
    else if (outcome.record.hotspots_verdict == "Violated") ++result.summary.hotspots_violated;
    else ++result.summary.hotspots_degenerate;
    for (const auto& kind : outcome.record.violations) {
      ++result.summary.violation_counts[kind];
      result.summary.violation_list.push_back(outcome.record.source + ": " + kind);
    }
    result.records.push_back(std::move(outcome.record));
  }
  if (result.summary.scanned > 0) {
    result.summary.hotspots_violation_rate =
        static_cast<double>(result.summary.hotspots_violated) /
        static_cast<double>(result.summary.scanned);
  }
  return result;
}

ScanResult scan_corpus(const std::vector<std::string>& paths, const ScanOptions& options) {
  namespace fs = std::filesystem;
  std::vector<std::string> files;
  for (const auto& path : paths) {
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<std::string> inside;
      for (const auto& entry : fs::directory_iterator(path)) {
        if (entry.is_regular_file()) inside.push_back(entry.path().string());
      }
      std::sort(inside.begin(), inside.end());
      files.insert(files.end(), inside.begin(), inside.end());
    } else {
      files.push_back(path);
    }
  }

  std::vector<std::pair<std::string, std::string>> lines;
  for (const auto& file : files) {
    std::ifstream in(file);
    if (!in) fail(errc::io_error, "cannot open " + file);
    std::string line;
    long long line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view view(line);
      while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
      if (view.empty()) continue;
      lines.emplace_back(file + ":" + std::to_string(line_no), std::string(view));
    }
  }
  return scan_lines(lines, options);
}

namespace {

std::string fmt_double(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  (void)ec;
  return std::string(buf, ptr);
}

using ordered_json = nlohmann::ordered_json;

ordered_json record_to_json(const ScanRecord& r) {
  ordered_json j;
  j["id"] = r.id;
  j["source"] = r.source;
  j["n"] = r.n;
  j["edge_count"] = r.edge_count;
  j["diameter"] = r.diameter;
  j["mindeg"] = r.mindeg;
  j["maxdeg"] = r.maxdeg;
  j["boundary_size"] = r.boundary_size;
  j["iso_lhs"] = r.iso_lhs;
  j["iso_rhs"] = r.iso_rhs.to_double();
  j["iso_rhs_num"] = r.iso_rhs.num;
  j["iso_rhs_den"] = r.iso_rhs.den;
  j["iso_holds"] = r.iso_holds;
  j["interior_empty"] = r.interior_empty;
  j["max_phi"] = r.max_phi;
  j["exit_time_bound"] = r.exit_time_bound;
  if (r.lambda1) j["lambda1"] = *r.lambda1; else j["lambda1"] = nullptr;
  j["faber_krahn_bound"] = r.faber_krahn_bound;
  if (r.hardy_certificate) j["hardy_certificate"] = *r.hardy_certificate;
  else j["hardy_certificate"] = nullptr;
  if (r.abp_sharp_constant) j["abp_sharp_constant"] = *r.abp_sharp_constant;
  else j["abp_sharp_constant"] = nullptr;
  j["abp_bound"] = r.abp_bound;
  j["hotspots_verdict"] = r.hotspots_verdict;
  j["lambda2"] = r.lambda2;
  j["lambda2_multiplicity"] = r.lambda2_multiplicity;
  j["ratio_applicable"] = r.ratio_applicable;
  if (r.hotspots_ratio) j["hotspots_ratio"] = *r.hotspots_ratio;
  else j["hotspots_ratio"] = nullptr;
  if (r.hotspots_ratio_log_bound) j["hotspots_ratio_log_bound"] = *r.hotspots_ratio_log_bound;
  else j["hotspots_ratio_log_bound"] = nullptr;
  j["violations"] = r.violations;
  return j;
}

}  // namespace

std::string scan_to_json(const ScanResult& result) {
  ordered_json doc;
  doc["records"] = ordered_json::array();
  for (const auto& r : result.records) doc["records"].push_back(record_to_json(r));
  ordered_json summary;
  summary["scanned"] = result.summary.scanned;
  summary["skipped"] = result.summary.skipped;
  summary["hotspots_holds"] = result.summary.hotspots_holds;
  summary["hotspots_violated"] = result.summary.hotspots_violated;
  summary["hotspots_degenerate"] = result.summary.hotspots_degenerate;
  summary["hotspots_violation_rate"] = result.summary.hotspots_violation_rate;
  summary["violation_counts"] = ordered_json::object();
  for (const auto& [kind, count] : result.summary.violation_counts) {
    summary["violation_counts"][kind] = count;
  }
  summary["violation_list"] = result.summary.violation_list;
  summary["skipped_list"] = result.summary.skipped_list;
  doc["summary"] = summary;
  return doc.dump(2) + "\n";
}

std::string scan_to_csv(const ScanResult& result) {
  std::string out =
      "id,source,n,edge_count,diameter,mindeg,maxdeg,boundary_size,iso_lhs,iso_rhs,"
      "iso_holds,interior_empty,max_phi,exit_time_bound,lambda1,faber_krahn_bound,"
      "hardy_certificate,abp_sharp_constant,abp_bound,hotspots_verdict,lambda2,"
      "lambda2_multiplicity,ratio_applicable,hotspots_ratio,hotspots_ratio_log_bound,"
      "violations\n";
  auto opt = [&](const std::optional<double>& v) { return v ? fmt_double(*v) : std::string(); };
  for (const auto& r : result.records) {
    out += std::to_string(r.id) + ',' + r.source + ',' + std::to_string(r.n) + ',' +
           std::to_string(r.edge_count) + ',' + std::to_string(r.diameter) + ',' +
           std::to_string(r.mindeg) + ',' + std::to_string(r.maxdeg) + ',' +
           std::to_string(r.boundary_size) + ',' + std::to_string(r.iso_lhs) + ',' +
           r.iso_rhs.str() + ',' + (r.iso_holds ? "true" : "false") + ',' +
           (r.interior_empty ? "true" : "false") + ',' + fmt_double(r.max_phi) + ',' +
           fmt_double(r.exit_time_bound) + ',' + opt(r.lambda1) + ',' +
           fmt_double(r.faber_krahn_bound) + ',' + opt(r.hardy_certificate) + ',' +
           opt(r.abp_sharp_constant) + ',' + fmt_double(r.abp_bound) + ',' +
           r.hotspots_verdict + ',' + fmt_double(r.lambda2) + ',' +
           std::to_string(r.lambda2_multiplicity) + ',' +
           (r.ratio_applicable ? "true" : "false") + ',' + opt(r.hotspots_ratio) + ',' +
           opt(r.hotspots_ratio_log_bound) + ',';
    for (size_t i = 0; i < r.violations.size(); ++i) {
      if (i) out += ';';
      out += r.violations[i];
    }
    out += '\n';
  }
  out += "# scanned=" + std::to_string(result.summary.scanned) + "\n";
  out += "# skipped=" + std::to_string(result.summary.skipped) + "\n";
  out += "# hotspots_holds=" + std::to_string(result.summary.hotspots_holds) + "\n";
  out += "# hotspots_violated=" + std::to_string(result.summary.hotspots_violated) + "\n";
  out += "# hotspots_degenerate=" + std::to_string(result.summary.hotspots_degenerate) + "\n";
  out += "# hotspots_violation_rate=" + fmt_double(result.summary.hotspots_violation_rate) + "\n";
  for (const auto& [kind, count] : result.summary.violation_counts) {
    out += "# violations_" + kind + "=" + std::to_string(count) + "\n";
  }
  for (const auto& line : result.summary.violation_list) out += "# violation " + line + "\n";
  for (const auto& line : result.summary.skipped_list) out += "# skipped " + line + "\n";
  return out;
}

}  // namespace graphpt
