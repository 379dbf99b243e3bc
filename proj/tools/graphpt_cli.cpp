// Command-line front end: one subcommand per inequality family plus a
// corpus scanner. Reads graph6 (default) or edge-list files.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "graphpt/abp.hpp"
#include "graphpt/boundary.hpp"
#include "graphpt/distance.hpp"
#include "graphpt/dot.hpp"
#include "graphpt/edgelist.hpp"
#include "graphpt/energy.hpp"
#include "graphpt/graph6.hpp"
#include "graphpt/hardy.hpp"
#include "graphpt/scan.hpp"
#include "graphpt/spectral.hpp"
#include "graphpt/walks.hpp"
#include "json.hpp"

namespace {

using nlohmann::ordered_json;

struct GlobalOptions {
  std::string format = "graph6";
  bool json = false;
  std::uint64_t seed = 0;
  std::string dot_path;
  int workers = 1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) graphpt::fail(graphpt::errc::io_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

graphpt::Graph load_graph(const std::string& path, const GlobalOptions& opts) {
  const std::string text = read_file(path);
  if (opts.format == "edgelist") return graphpt::parse_edgelist(text).graph;
  // graph6: first non-empty line
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::string_view view(line);
    while (!view.empty() && (view.back() == '\r' || view.back() == ' ')) view.remove_suffix(1);
    if (!view.empty()) return graphpt::parse_graph6(view);
  }
  graphpt::fail(graphpt::errc::bad_length, "no graph line in " + path);
}

void emit(const GlobalOptions& opts, const ordered_json& doc, const std::string& text) {
  if (opts.json) {
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

int run_boundary(const std::string& path, const GlobalOptions& opts) {
  const graphpt::Graph g = load_graph(path, opts);
  const graphpt::DistanceMatrix dist = graphpt::all_pairs_distances(g);
  const graphpt::BoundarySet boundary = graphpt::boundary_set(g, dist);

  ordered_json doc;
  doc["n"] = g.order();
  doc["edge_count"] = g.edge_count();
  doc["diameter"] = dist.diameter();
  doc["boundary_size"] = boundary.size();
  doc["boundary"] = boundary.members;
  ordered_json witnesses = ordered_json::object();
  for (int v : boundary.members) witnesses[std::to_string(v)] = boundary.witness[static_cast<size_t>(v)];
  doc["witness"] = witnesses;

  std::ostringstream text;
  text << "n=" << g.order() << " m=" << g.edge_count() << " diameter=" << dist.diameter() << "\n";
  text << "boundary (" << boundary.size() << "):";
  for (int v : boundary.members) text << " " << v;
  text << "\n";
  text << "witnesses:";
  for (int v : boundary.members) text << " " << v << "->" << boundary.witness[static_cast<size_t>(v)];
  text << "\n";

  if (g.order() >= 2) {
    const auto iso = graphpt::isoperimetric_report(g, dist, boundary);
    doc["iso_lhs"] = iso.lhs;
    doc["iso_rhs"] = iso.rhs.to_double();
    doc["iso_rhs_exact"] = iso.rhs.str();
    doc["iso_holds"] = iso.holds;
    text << "isoperimetric: lhs=" << iso.lhs << " rhs=" << iso.rhs.str()
         << " holds=" << (iso.holds ? "true" : "false") << "\n";
  }

  if (!opts.dot_path.empty()) graphpt::write_dot(g, boundary, opts.dot_path);
  emit(opts, doc, text.str());
  return 0;
}

int run_walk(const std::string& path, const GlobalOptions& opts, int v0, std::uint64_t trials) {
  const graphpt::Graph g = load_graph(path, opts);
  const graphpt::DistanceMatrix dist = graphpt::all_pairs_distances(g);
  const graphpt::BoundarySet boundary = graphpt::boundary_set(g, dist);
  const graphpt::HittingPotential phi = graphpt::hitting_potential(g, boundary.members);
  const auto [mindeg, maxdeg] = g.degree_extremes();
  (void)mindeg;
  const double bound = static_cast<double>(maxdeg) * dist.diameter() * dist.diameter();

  ordered_json doc;
  doc["n"] = g.order();
  doc["boundary_size"] = boundary.size();
  doc["max_phi"] = phi.max();
  doc["exit_time_bound"] = bound;
  doc["phi"] = phi.phi;

  std::ostringstream text;
  text << "max_phi=" << phi.max() << " bound=" << bound << "\n";

  if (v0 >= 0) {
    doc["v0"] = v0;
    doc["phi_v0"] = phi.phi[static_cast<size_t>(v0)];
    text << "phi(" << v0 << ")=" << phi.phi[static_cast<size_t>(v0)] << "\n";
    if (trials > 0) {
      const auto est = graphpt::estimate_exit_time(g, boundary.members, v0, trials,
                                                   graphpt::RngSeed{opts.seed, 0});
      doc["mc_mean"] = est.mean;
      doc["mc_stderr"] = est.stderr_;
      doc["mc_trials"] = est.trials;
      text << "monte_carlo mean=" << est.mean << " stderr=" << est.stderr_
           << " trials=" << est.trials << "\n";
    }
  }

  if (!opts.dot_path.empty()) graphpt::write_dot(g, boundary, opts.dot_path);
  emit(opts, doc, text.str());
  return 0;
}

int run_spectrum(const std::string& path, const GlobalOptions& opts) {
  const graphpt::Graph g = load_graph(path, opts);
  const graphpt::DistanceMatrix dist = graphpt::all_pairs_distances(g);
  const graphpt::BoundarySet boundary = graphpt::boundary_set(g, dist);
  const auto fk = graphpt::faber_krahn_report(g, dist, boundary);
  const auto hotspots = graphpt::hotspots_report(g, boundary);
  const auto ratio = graphpt::hotspots_ratio_check(g, dist, boundary);

  ordered_json doc;
  std::ostringstream text;
  doc["interior_empty"] = fk.interior_empty;
  if (fk.lambda1) {
    doc["lambda1"] = *fk.lambda1;
    text << "lambda1=" << *fk.lambda1 << " faber_krahn_bound=" << fk.bound
         << " holds=" << (fk.holds ? "true" : "false") << "\n";
  } else {
    doc["lambda1"] = nullptr;
    text << "lambda1 undefined (interior empty); faber_krahn holds vacuously\n";
  }
  doc["faber_krahn_bound"] = fk.bound;
  doc["faber_krahn_holds"] = fk.holds;
  if (fk.q) doc["q"] = *fk.q; else doc["q"] = nullptr;

  doc["lambda2"] = hotspots.lambda2;
  doc["lambda2_multiplicity"] = hotspots.multiplicity;
  doc["hotspots_verdict"] = graphpt::to_string(hotspots.overall);
  text << "lambda2=" << hotspots.lambda2 << " multiplicity=" << hotspots.multiplicity
       << " hotspots=" << graphpt::to_string(hotspots.overall) << "\n";

  doc["ratio_applicable"] = ratio.applicable;
  if (ratio.applicable) {
    doc["ratio"] = ratio.ratio;
    doc["ratio_log_bound"] = ratio.log_bound;
    doc["ratio_holds"] = ratio.holds;
    text << "eigenvector_ratio ratio=" << ratio.ratio << " log_bound=" << ratio.log_bound
         << " holds=" << (ratio.holds ? "true" : "false") << "\n";
  } else {
    text << "eigenvector_ratio inapplicable\n";
  }

  if (!opts.dot_path.empty()) graphpt::write_dot(g, boundary, opts.dot_path);
  emit(opts, doc, text.str());
  return 0;
}

int run_hardy(const std::string& path, const GlobalOptions& opts) {
  const graphpt::Graph g = load_graph(path, opts);
  const graphpt::DistanceMatrix dist = graphpt::all_pairs_distances(g);
  const graphpt::BoundarySet boundary = graphpt::boundary_set(g, dist);

  ordered_json doc;
  std::ostringstream text;
  if (boundary.size() == g.order()) {
    doc["interior_empty"] = true;
    doc["certificate"] = nullptr;
    text << "interior empty; hardy holds vacuously\n";
  } else {
    const graphpt::HittingPotential phi = graphpt::hitting_potential(g, boundary.members);
    const double certificate = graphpt::hardy_certificate(g, boundary, phi);
    doc["interior_empty"] = false;
    doc["certificate"] = certificate;
    doc["max_phi"] = phi.max();
    text << "hardy_certificate=" << certificate << " (>= 0 up to tolerance means the"
         << " inequality holds for every admissible f)\n";
  }
  emit(opts, doc, text.str());
  return 0;
}

int run_abp(const std::string& path, const GlobalOptions& opts) {
  const graphpt::Graph g = load_graph(path, opts);
  const graphpt::DistanceMatrix dist = graphpt::all_pairs_distances(g);
  const graphpt::BoundarySet boundary = graphpt::boundary_set(g, dist);
  const auto [mindeg, maxdeg] = g.degree_extremes();
  const double bound = 2.0 * maxdeg / mindeg * dist.diameter() * dist.diameter();

  ordered_json doc;
  std::ostringstream text;
  doc["abp_bound"] = bound;
  if (boundary.size() == g.order()) {
    doc["interior_empty"] = true;
    doc["sharp_constant"] = nullptr;
    text << "interior empty; abp bound " << bound << " holds vacuously\n";
  } else {
    const double sharp = graphpt::abp_sharp_constant(g, boundary.members);
    doc["interior_empty"] = false;
    doc["sharp_constant"] = sharp;
    doc["holds"] = sharp <= bound + 1e-6;
    text << "sharp_constant=" << sharp << " abp_bound=" << bound
         << " holds=" << (sharp <= bound + 1e-6 ? "true" : "false") << "\n";
  }
  emit(opts, doc, text.str());
  return 0;
}

int run_energy(const std::string& path, const GlobalOptions& opts, double alpha, int restarts) {
  const graphpt::Graph g = load_graph(path, opts);
  const graphpt::DistanceMatrix dist = graphpt::all_pairs_distances(g);
  const graphpt::BoundarySet boundary = graphpt::boundary_set(g, dist);
  const graphpt::Kernel kernel = graphpt::Kernel::power(alpha, dist.diameter());

  graphpt::MaximizeOptions options;
  options.restarts = restarts;
  options.seed = graphpt::RngSeed{opts.seed, 0};
  const auto result = graphpt::maximize_energy(g, dist, boundary, kernel, options);

  ordered_json doc;
  doc["alpha"] = alpha;
  doc["energy"] = result.energy;
  doc["interior_mass"] = result.interior_mass;
  doc["mu"] = result.mu.mass;

  std::ostringstream text;
  text << "alpha=" << alpha << " energy=" << result.energy
       << " interior_mass=" << result.interior_mass << "\n";
  text << "mu:";
  for (int v = 0; v < g.order(); ++v) {
    if (result.mu.mass[static_cast<size_t>(v)] > 1e-9) {
      text << " " << v << ":" << result.mu.mass[static_cast<size_t>(v)];
    }
  }
  text << "\n";
  emit(opts, doc, text.str());
  return 0;
}

int run_scan(const std::vector<std::string>& paths, const GlobalOptions& opts) {
  graphpt::ScanOptions options;
  options.workers = opts.workers;
  options.seed = opts.seed;
  const graphpt::ScanResult result = graphpt::scan_corpus(paths, options);
  std::cout << (opts.json ? graphpt::scan_to_json(result) : graphpt::scan_to_csv(result));
  return 0;
}

int exit_code_for(graphpt::errc code) {
  switch (code) {
    case graphpt::errc::internal_error:
    case graphpt::errc::non_termination:
    case graphpt::errc::walk_cap_exceeded:
      return 2;
    default:
      return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete potential theory on graph boundaries"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  app.add_option("--format", opts.format, "input format")
      ->check(CLI::IsMember({"graph6", "edgelist"}))
      ->capture_default_str();
  app.add_flag("--json", opts.json, "JSON output");
  app.add_option("--seed", opts.seed, "random seed")->capture_default_str();
  app.add_option("--dot", opts.dot_path, "write DOT with the boundary in red");
  app.add_option("--workers", opts.workers, "scan worker threads")->capture_default_str();

  std::string file;
  std::vector<std::string> scan_paths;
  int v0 = -1;
  std::uint64_t trials = 0;
  double alpha = 2.0;
  int restarts = 16;

  auto* boundary_cmd = app.add_subcommand("boundary", "boundary set and isoperimetric report");
  boundary_cmd->add_option("file", file)->required();

  auto* walk_cmd = app.add_subcommand("walk", "hitting potential and exit-time sampling");
  walk_cmd->add_option("file", file)->required();
  walk_cmd->add_option("--v0", v0, "start vertex");
  walk_cmd->add_option("--trials", trials, "Monte-Carlo trials");

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Dirichlet/Neumann spectra and hot spots");
  spectrum_cmd->add_option("file", file)->required();

  auto* hardy_cmd = app.add_subcommand("hardy", "Hardy inequality certificate");
  hardy_cmd->add_option("file", file)->required();

  auto* abp_cmd = app.add_subcommand("abp", "sharp maximum-principle constant");
  abp_cmd->add_option("file", file)->required();

  auto* energy_cmd = app.add_subcommand("energy", "distance-energy maximization");
  energy_cmd->add_option("file", file)->required();
  energy_cmd->add_option("--alpha", alpha, "kernel exponent")->capture_default_str();
  energy_cmd->add_option("--restarts", restarts, "multistart count")->capture_default_str();

  auto* scan_cmd = app.add_subcommand("scan", "scan graph6 corpora");
  scan_cmd->add_option("paths", scan_paths)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (boundary_cmd->parsed()) return run_boundary(file, opts);
    if (walk_cmd->parsed()) return run_walk(file, opts, v0, trials);
    if (spectrum_cmd->parsed()) return run_spectrum(file, opts);
    if (hardy_cmd->parsed()) return run_hardy(file, opts);
    if (abp_cmd->parsed()) return run_abp(file, opts);
    if (energy_cmd->parsed()) return run_energy(file, opts, alpha, restarts);
    if (scan_cmd->parsed()) return run_scan(scan_paths, opts);
  } catch (const graphpt::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
