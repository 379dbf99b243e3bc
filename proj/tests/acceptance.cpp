// Acceptance suite: thirteen end-to-end criteria, one PASS/FAIL line each.
// Exit status 0 iff every criterion passes.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "graphpt/abp.hpp"
#include "graphpt/boundary.hpp"
#include "graphpt/distance.hpp"
#include "graphpt/energy.hpp"
#include "graphpt/families.hpp"
#include "graphpt/graph6.hpp"
#include "graphpt/hardy.hpp"
#include "graphpt/scan.hpp"
#include "graphpt/spectral.hpp"
#include "graphpt/walks.hpp"
#include "support/corpus.hpp"
#include "support/enumerate.hpp"
#include "support/lp.hpp"

using namespace graphpt;
using testsupport::NamedGraph;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %02d %s: %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct AnalyzedGraph {
  std::string name;
  Graph graph;
  DistanceMatrix dist;
  BoundarySet boundary;
};

std::vector<AnalyzedGraph> analyze(std::vector<NamedGraph> graphs) {
  std::vector<AnalyzedGraph> out;
  out.reserve(graphs.size());
  for (auto& [name, g] : graphs) {
    DistanceMatrix dist = all_pairs_distances(g);
    BoundarySet boundary = boundary_set(g, dist);
    out.push_back({std::move(name), std::move(g), std::move(dist), std::move(boundary)});
  }
  return out;
}

bool is_path_shape(const Graph& g) {
  if (g.edge_count() != g.order() - 1) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 2) return false;
  }
  return true;
}

// 1. Tree boundaries are the leaves; path boundaries are the endpoints;
//    every connected graph on >= 2 vertices has >= 2 boundary vertices with
//    equality exactly on paths.
void criterion_boundary_ground_truth(const std::vector<std::vector<Graph>>& small) {
  bool pass = true;
  std::string detail;

  CounterRng sizes(RngSeed{1001, 0});
  for (int i = 0; i < 200 && pass; ++i) {
    const int n = 2 + static_cast<int>(sizes.next_below(199));
    const Graph tree = random_tree(n, RngSeed{1002, static_cast<std::uint64_t>(i)});
    const DistanceMatrix dist = all_pairs_distances(tree);
    const BoundarySet boundary = boundary_set(tree, dist);
    std::vector<int> leaves;
    for (int v = 0; v < n; ++v) {
      if (tree.degree(v) == 1) leaves.push_back(v);
    }
    if (boundary.members != leaves) {
      pass = false;
      detail = "tree " + std::to_string(i) + " boundary differs from its leaves";
    }
  }

  for (int n = 2; n <= 50 && pass; ++n) {
    const Graph p = path_graph(n);
    const DistanceMatrix dist = all_pairs_distances(p);
    if (boundary_set(p, dist).members != std::vector<int>{0, n - 1}) {
      pass = false;
      detail = "path " + std::to_string(n) + " boundary is not {0, n-1}";
    }
  }

  long long checked = 0;
  for (int n = 2; n <= 8 && pass; ++n) {
    for (const Graph& g : small[static_cast<size_t>(n)]) {
      const DistanceMatrix dist = all_pairs_distances(g);
      const BoundarySet boundary = boundary_set(g, dist);
      ++checked;
      if (boundary.size() < 2 || (boundary.size() == 2) != is_path_shape(g)) {
        pass = false;
        detail = "size-2 characterization fails on an n=" + std::to_string(n) + " graph";
        break;
      }
    }
  }

  if (pass) {
    detail = "200 trees (n<=200) = leaves; paths n=2..50 = endpoints; |boundary|>=2 with "
             "equality exactly on paths over " + std::to_string(checked) + " graphs n<=8";
  }
  report(1, pass, detail);
}

// 2. Definition and level-counting routes agree everywhere.
void criterion_equivalence(const std::vector<std::vector<Graph>>& small) {
  long long mismatches = 0;
  long long total = 0;
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : small[static_cast<size_t>(n)]) {
      const DistanceMatrix dist = all_pairs_distances(g);
      ++total;
      if (boundary_set(g, dist).members != boundary_via_levels(g, dist)) ++mismatches;
    }
  }
  CounterRng rng(RngSeed{2001, 0});
  for (int i = 0; i < 500; ++i) {
    const int n = 2 + static_cast<int>(rng.next_below(59));
    const double extra = rng.next_double() * 2.0;
    const Graph g = random_connected_graph(n, extra, RngSeed{2002, static_cast<std::uint64_t>(i)});
    const DistanceMatrix dist = all_pairs_distances(g);
    ++total;
    if (boundary_set(g, dist).members != boundary_via_levels(g, dist)) ++mismatches;
  }
  report(2, mismatches == 0,
         "definition == level route on " + std::to_string(total) + " graphs (" +
             std::to_string(mismatches) + " mismatches)");
}

// 3. Isoperimetric inequality, exact rational comparison.
void criterion_isoperimetric(const std::vector<AnalyzedGraph>& corpus,
                             const std::vector<std::vector<Graph>>& small) {
  long long checked = 0;
  bool pass = true;
  for (const auto& item : corpus) {
    ++checked;
    if (!isoperimetric_report(item.graph, item.dist, item.boundary).holds) pass = false;
  }
  for (int n = 2; n <= 8 && pass; ++n) {
    for (const Graph& g : small[static_cast<size_t>(n)]) {
      const DistanceMatrix dist = all_pairs_distances(g);
      ++checked;
      if (!isoperimetric_report(g, dist, boundary_set(g, dist)).holds) {
        pass = false;
        break;
      }
    }
  }
  report(3, pass, "|boundary| >= n / (2 maxdeg diam) exactly on " + std::to_string(checked) +
                      " graphs");
}

// 4. Expected exit times obey maxdeg * diam^2; Monte Carlo agrees with the
//    exact potential at the grid center.
void criterion_exit_time(const std::vector<AnalyzedGraph>& corpus,
                         const std::vector<std::vector<Graph>>& small) {
  bool pass = true;
  std::string detail;
  long long checked = 0;
  auto check_graph = [&](const Graph& g, const DistanceMatrix& dist, const BoundarySet& boundary) {
    const HittingPotential phi = hitting_potential(g, boundary.members);
    const auto [mindeg, maxdeg] = g.degree_extremes();
    (void)mindeg;
    const double bound = static_cast<double>(maxdeg) * dist.diameter() * dist.diameter();
    ++checked;
    if (phi.max() > bound + 1e-9 * (1 + bound)) {
      pass = false;
      detail = "potential bound fails (max_phi=" + std::to_string(phi.max()) + ")";
    }
  };
  for (const auto& item : corpus) check_graph(item.graph, item.dist, item.boundary);
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : small[static_cast<size_t>(n)]) {
      if (!pass) break;
      const DistanceMatrix dist = all_pairs_distances(g);
      check_graph(g, dist, boundary_set(g, dist));
    }
  }

  double mc_mean = 0, mc_stderr = 0, exact = 0;
  if (pass) {
    const Graph grid = grid_graph(10, 10);
    const DistanceMatrix dist = all_pairs_distances(grid);
    const BoundarySet boundary = boundary_set(grid, dist);
    const HittingPotential phi = hitting_potential(grid, boundary.members);
    const int center = 5 * 10 + 5;
    exact = phi.phi[static_cast<size_t>(center)];
    const auto est = estimate_exit_time(grid, boundary.members, center, 100000, RngSeed{4001, 0});
    mc_mean = est.mean;
    mc_stderr = est.stderr_;
    if (std::abs(est.mean - exact) > 3 * est.stderr_) {
      pass = false;
      detail = "grid Monte Carlo off: mean " + std::to_string(est.mean) + " vs exact " +
               std::to_string(exact);
    }
  }
  if (pass) {
    std::ostringstream s;
    s << "max_phi <= maxdeg diam^2 on " << checked << " graphs; 10x10 center: exact " << exact
      << ", MC " << mc_mean << " +- " << mc_stderr << " (1e5 walks, within 3 se)";
    detail = s.str();
  }
  report(4, pass, detail);
}

// 5. Interval walk: exact mean m^2 and the exponential tail bound.
void criterion_interval_walk() {
  bool pass = true;
  std::string detail;
  for (int m = 2; m <= 8 && pass; ++m) {
    if (interval_mean_exact(m, 0) != Rational(static_cast<long long>(m) * m)) {
      pass = false;
      detail = "exact mean differs from m^2 at m=" + std::to_string(m);
    }
    for (int k = 4 * m * m; k <= 400 && pass; ++k) {
      const double tail = interval_tail_exact(m, 0, k);
      const double bound = 4.0 * std::pow(2.0, -static_cast<double>(k) / (2.0 * m * m));
      if (tail > bound) {
        pass = false;
        detail = "tail bound fails at m=" + std::to_string(m) + ", k=" + std::to_string(k);
      }
    }
  }
  if (pass) detail = "mean == m^2 exactly and P(T>=k) <= 4*2^(-k/(2m^2)) for m=2..8, k in [4m^2,400]";
  report(5, pass, detail);
}

// 6. Faber-Krahn with the Dirichlet ground state.
void criterion_faber_krahn(const std::vector<AnalyzedGraph>& corpus,
                           const std::vector<std::vector<Graph>>& small) {
  bool pass = true;
  std::string detail;
  long long checked = 0;
  auto check_graph = [&](const Graph& g, const DistanceMatrix& dist, const BoundarySet& boundary) {
    const FaberKrahnReport fk = faber_krahn_report(g, dist, boundary);
    if (fk.interior_empty) return;
    ++checked;
    if (!(*fk.lambda1 >= fk.bound - 1e-9)) {
      pass = false;
      detail = "lambda1 below the bound";
    }
  };
  for (const auto& item : corpus) check_graph(item.graph, item.dist, item.boundary);
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : small[static_cast<size_t>(n)]) {
      if (!pass) break;
      const DistanceMatrix dist = all_pairs_distances(g);
      check_graph(g, dist, boundary_set(g, dist));
    }
  }

  const Eigenpair p5 = smallest_dirichlet_eigenpair(path_graph(5), std::vector<int>{0, 4});
  if (std::abs(p5.value - (2.0 - std::numbers::sqrt2)) > 1e-9) {
    pass = false;
    detail = "P5 lambda1 != 2 - sqrt(2)";
  }
  if (pass) {
    detail = "lambda1 >= mindeg/(4 diam^2) on " + std::to_string(checked) +
             " graphs with interior; P5 lambda1 = 2 - sqrt2 to 1e-9";
  }
  report(6, pass, detail);
}

// 7. Survival probability of the absorbed walk started at the ground-state
//    argmax dominates (1-q)^k for k up to 4 diam^2.
void criterion_survival_link(const std::vector<AnalyzedGraph>& corpus) {
  bool pass = true;
  std::string detail;
  long long graphs = 0, vacuous = 0;
  for (const auto& item : corpus) {
    if (!pass) break;
    const auto& g = item.graph;
    if (item.boundary.size() == g.order()) continue;
    const Eigenpair pair = smallest_dirichlet_eigenpair(g, item.boundary.members);
    const auto [mindeg, maxdeg] = g.degree_extremes();
    (void)maxdeg;
    const double q = pair.value / mindeg;
    if (q >= 1.0) {
      ++vacuous;  // the bound degenerates for q >= 1; nothing to test
      continue;
    }
    ++graphs;
    int v0 = 0;
    for (int v = 1; v < g.order(); ++v) {
      if (pair.vector[static_cast<size_t>(v)] > pair.vector[static_cast<size_t>(v0)]) v0 = v;
    }
    const std::vector<char> absorbing = vertex_mask(g, item.boundary.members);
    std::vector<double> mass(static_cast<size_t>(g.order()), 0.0);
    mass[static_cast<size_t>(v0)] = 1.0;
    std::vector<double> next(mass.size());
    const int horizon = 4 * item.dist.diameter() * item.dist.diameter();
    double lower = 1.0;
    for (int k = 1; k <= horizon; ++k) {
      std::fill(next.begin(), next.end(), 0.0);
      for (int v = 0; v < g.order(); ++v) {
        const double mv = mass[static_cast<size_t>(v)];
        if (mv == 0) continue;
        if (absorbing[static_cast<size_t>(v)]) {
          next[static_cast<size_t>(v)] += mv;
        } else {
          const double share = mv / g.degree(v);
          for (int w : g.neighbors(v)) next[static_cast<size_t>(w)] += share;
        }
      }
      mass.swap(next);
      lower *= 1.0 - q;
      double survival = 0;
      for (int v = 0; v < g.order(); ++v) {
        if (!absorbing[static_cast<size_t>(v)]) survival += mass[static_cast<size_t>(v)];
      }
      if (survival < lower - 1e-9) {
        pass = false;
        detail = item.name + ": survival " + std::to_string(survival) + " < (1-q)^" +
                 std::to_string(k);
        break;
      }
    }
  }
  if (pass) {
    detail = "mu_k(V \\ boundary) >= (1-q)^k for k <= 4 diam^2 on " + std::to_string(graphs) +
             " corpus graphs (" + std::to_string(vacuous) + " vacuous with q >= 1)";
  }
  report(7, pass, detail);
}

// 8. Hardy: nonnegative certificate everywhere, random admissible functions,
//    and the equality case on P3.
void criterion_hardy(const std::vector<AnalyzedGraph>& corpus,
                     const std::vector<std::vector<Graph>>& small) {
  bool pass = true;
  std::string detail;
  long long certificates = 0, samples = 0;
  CounterRng rng(RngSeed{8001, 0});

  for (const auto& item : corpus) {
    if (!pass) break;
    if (item.boundary.size() == item.graph.order()) continue;
    const HittingPotential phi = hitting_potential(item.graph, item.boundary.members);
    ++certificates;
    if (hardy_certificate(item.graph, item.boundary, phi) < -1e-8) {
      pass = false;
      detail = item.name + ": negative certificate";
      break;
    }
    for (int trial = 0; trial < 1000; ++trial) {
      const std::vector<double> f =
          testsupport::random_interior_function(item.graph, item.boundary, rng);
      ++samples;
      if (!hardy_check(item.graph, item.boundary, phi, f).holds) {
        pass = false;
        detail = item.name + ": random admissible f violates the inequality";
        break;
      }
    }
  }
  for (int n = 2; n <= 8 && pass; ++n) {
    for (const Graph& g : small[static_cast<size_t>(n)]) {
      const DistanceMatrix dist = all_pairs_distances(g);
      const BoundarySet boundary = boundary_set(g, dist);
      if (boundary.size() == g.order()) continue;
      const HittingPotential phi = hitting_potential(g, boundary.members);
      ++certificates;
      if (hardy_certificate(g, boundary, phi) < -1e-8) {
        pass = false;
        detail = "negative certificate on an n=" + std::to_string(n) + " graph";
        break;
      }
    }
  }

  if (pass) {
    const Graph p3 = path_graph(3);
    const DistanceMatrix dist = all_pairs_distances(p3);
    const BoundarySet boundary = boundary_set(p3, dist);
    const HittingPotential phi = hitting_potential(p3, boundary.members);
    const HardyCheck eq = hardy_check(p3, boundary, phi, std::vector<double>{0, 1, 0});
    if (std::abs(eq.lhs - 2.0) > 1e-12 || std::abs(eq.rhs - 2.0) > 1e-12) {
      pass = false;
      detail = "P3 equality case does not give lhs = rhs = 2";
    }
  }
  if (pass) {
    detail = "certificate >= -1e-8 on " + std::to_string(certificates) + " graphs; " +
             std::to_string(samples) + " random admissible f hold; P3 equality lhs = rhs = 2";
  }
  report(8, pass, detail);
}

// 9. Sharp maximum-principle constants: universal bound, LP oracle equality
//    on every small graph, the explicit path value, rooted-tree growth.
void criterion_abp(const std::vector<AnalyzedGraph>& corpus,
                   const std::vector<std::vector<Graph>>& small) {
  bool pass = true;
  std::string detail;

  long long universal = 0;
  for (const auto& item : corpus) {
    if (item.boundary.size() == item.graph.order()) continue;
    const auto [mindeg, maxdeg] = item.graph.degree_extremes();
    const double bound = 2.0 * maxdeg / mindeg * item.dist.diameter() * item.dist.diameter();
    ++universal;
    if (abp_sharp_constant(item.graph, item.boundary.members) > bound + 1e-6) {
      pass = false;
      detail = item.name + ": sharp constant above the universal bound";
      break;
    }
  }

  long long lp_checked = 0;
  for (int n = 2; n <= 7 && pass; ++n) {
    for (const Graph& g : small[static_cast<size_t>(n)]) {
      const DistanceMatrix dist = all_pairs_distances(g);
      const BoundarySet boundary = boundary_set(g, dist);
      if (boundary.size() == g.order()) continue;
      const double sharp = abp_sharp_constant(g, boundary.members);
      const double lp = testsupport::abp_constant_lp(g, boundary.members);
      ++lp_checked;
      if (std::abs(sharp - lp) > 1e-6 * (1 + std::abs(lp))) {
        pass = false;
        detail = "LP oracle disagrees on an n=" + std::to_string(n) + " graph (" +
                 std::to_string(sharp) + " vs " + std::to_string(lp) + ")";
        break;
      }
    }
  }

  if (pass) {
    const double path_sharp = abp_sharp_constant(path_graph(11), std::vector<int>{0, 10});
    if (std::abs(path_sharp - 12.5) > 1e-9) {
      pass = false;
      detail = "path 0..10 sharp constant is " + std::to_string(path_sharp) + ", not 12.5";
    }
  }

  if (pass) {
    double previous = abp_sharp_constant(binary_tree(3), std::vector<int>{0});
    for (int depth = 4; depth <= 6; ++depth) {
      const double current = abp_sharp_constant(binary_tree(depth), std::vector<int>{0});
      if (current / previous < 1.8) {
        pass = false;
        detail = "rooted-tree growth ratio below 1.8 at depth " + std::to_string(depth);
        break;
      }
      previous = current;
    }
  }

  if (pass) {
    detail = "universal bound on " + std::to_string(universal) + " graphs; torsion max == LP on " +
             std::to_string(lp_checked) + " graphs n<=7; path 0..10 gives 12.5; rooted trees grow "
             ">= 1.8x per level (depth 3..6)";
  }
  report(9, pass, detail);
}

// 10. Eigenvector ratio bound where applicable, flagged otherwise.
void criterion_ratio_bound(const std::vector<AnalyzedGraph>& corpus,
                           const std::vector<std::vector<Graph>>& small) {
  bool pass = true;
  std::string detail;
  long long applicable = 0, flagged = 0;
  auto check_graph = [&](const std::string& name, const Graph& g, const DistanceMatrix& dist,
                         const BoundarySet& boundary) {
    const HotspotsRatioCheck check = hotspots_ratio_check(g, dist, boundary);
    if (!check.applicable) {
      ++flagged;
      return;
    }
    ++applicable;
    if (!check.holds) {
      pass = false;
      detail = name + ": ratio " + std::to_string(check.ratio) + " exceeds the bound";
    }
  };
  for (const auto& item : corpus) check_graph(item.name, item.graph, item.dist, item.boundary);
  for (int n = 2; n <= 8; ++n) {
    for (const Graph& g : small[static_cast<size_t>(n)]) {
      if (!pass) break;
      const DistanceMatrix dist = all_pairs_distances(g);
      check_graph("enum" + std::to_string(n), g, dist, boundary_set(g, dist));
    }
  }
  if (pass) {
    detail = "ratio <= (1 - lambda2/mindeg)^-K on " + std::to_string(applicable) +
             " applicable graphs; " + std::to_string(flagged) + " flagged inapplicable";
  }
  report(10, pass, detail);
}

// 11. Hot spots: zero violations on paths, cycles, grids and random trees;
//     the general rate is reported, not asserted.
void criterion_hotspots(const std::vector<AnalyzedGraph>& corpus,
                        const std::vector<std::vector<Graph>>& small) {
  bool pass = true;
  std::string detail;
  long long structured = 0;
  auto verdict_of = [](const Graph& g) {
    const DistanceMatrix dist = all_pairs_distances(g);
    return hotspots_report(g, boundary_set(g, dist)).overall;
  };

  for (int n = 2; n <= 30 && pass; ++n) {
    ++structured;
    if (verdict_of(path_graph(n)) == HotspotsVerdict::violated) {
      pass = false;
      detail = "path " + std::to_string(n) + " violates";
    }
  }
  for (int n = 3; n <= 30 && pass; ++n) {
    ++structured;
    if (verdict_of(cycle_graph(n)) == HotspotsVerdict::violated) {
      pass = false;
      detail = "cycle " + std::to_string(n) + " violates";
    }
  }
  for (int r = 2; r <= 8 && pass; ++r) {
    for (int c = r; c <= 8 && pass; ++c) {
      ++structured;
      if (verdict_of(grid_graph(r, c)) == HotspotsVerdict::violated) {
        pass = false;
        detail = "grid " + std::to_string(r) + "x" + std::to_string(c) + " violates";
      }
    }
  }
  for (int i = 0; i < 200 && pass; ++i) {
    const int n = 3 + static_cast<int>((i * 7) % 118);
    ++structured;
    if (verdict_of(random_tree(n, RngSeed{11001, static_cast<std::uint64_t>(i)})) ==
        HotspotsVerdict::violated) {
      pass = false;
      detail = "random tree " + std::to_string(i) + " violates";
    }
  }

  long long scanned = 0, violated = 0, degenerate = 0;
  if (pass) {
    auto tally = [&](const Graph& g, const BoundarySet& boundary) {
      const HotspotsVerdict v = hotspots_report(g, boundary).overall;
      ++scanned;
      if (v == HotspotsVerdict::violated) ++violated;
      if (v == HotspotsVerdict::degenerate) ++degenerate;
    };
    for (const auto& item : corpus) tally(item.graph, item.boundary);
    for (int n = 2; n <= 8; ++n) {
      for (const Graph& g : small[static_cast<size_t>(n)]) {
        const DistanceMatrix dist = all_pairs_distances(g);
        tally(g, boundary_set(g, dist));
      }
    }
  }
  if (pass) {
    std::ostringstream s;
    s << "0 violations across " << structured << " paths/cycles/grids/trees; general-corpus rate "
      << (scanned ? static_cast<double>(violated) / static_cast<double>(scanned) : 0.0) << " ("
      << violated << "/" << scanned << " violated, " << degenerate
      << " degenerate) [reported, not asserted]";
    detail = s.str();
  }
  report(11, pass, detail);
}

// 12. Energy maximization: the certified move strictly improves, the
//     multistart solver matches the grid oracle with boundary support, and
//     the endpoint measure of P5 attains energy 8.
void criterion_energy(const std::vector<std::vector<Graph>>& small) {
  bool pass = true;
  std::string detail;

  CounterRng rng(RngSeed{12001, 0});
  int done = 0, attempts = 0;
  double min_gain = 1e300;
  while (done < 500 && attempts < 20000 && pass) {
    ++attempts;
    const int n = 4 + static_cast<int>(rng.next_below(7));
    const Graph g =
        random_connected_graph(n, 0.3 + 1.2 * rng.next_double(),
                               RngSeed{12002, static_cast<std::uint64_t>(attempts)});
    const DistanceMatrix dist = all_pairs_distances(g);
    const BoundarySet boundary = boundary_set(g, dist);
    std::vector<int> interior;
    for (int v = 0; v < n; ++v) {
      if (!boundary.contains(v)) interior.push_back(v);
    }
    if (interior.empty()) continue;
    const int a = interior[rng.next_below(static_cast<std::uint32_t>(interior.size()))];
    std::vector<double> mass(static_cast<size_t>(n));
    double total = 0;
    for (double& m : mass) {
      m = rng.next_double();
      total += m;
    }
    for (double& m : mass) m /= total;
    if (mass[static_cast<size_t>(a)] <= 0.01) continue;
    VertexMeasure mu;
    mu.mass = std::move(mass);
    const double alpha = 1.1 + 1.9 * rng.next_double();
    const Kernel kernel = Kernel::power(alpha, dist.diameter());
    const double before = energy(g, dist, kernel, mu);
    const double after = energy(g, dist, kernel, improvement_move(g, dist, kernel, mu, a));
    min_gain = std::min(min_gain, after - before);
    if (!(after > before - 1e-12) || !(after > before)) {
      pass = false;
      detail = "improvement move failed to strictly increase the energy";
    }
    ++done;
  }
  if (pass && done < 500) {
    pass = false;
    detail = "only generated " + std::to_string(done) + " strict-improvement cases";
  }

  long long matched = 0, mismatched = 0;
  double worst_delta = 0;
  std::string worst_case;
  for (int n = 2; n <= 7 && pass; ++n) {
    const int grid_steps = n <= 5 ? 14 : 12;
    for (const Graph& g : small[static_cast<size_t>(n)]) {
      const DistanceMatrix dist = all_pairs_distances(g);
      const BoundarySet boundary = boundary_set(g, dist);
      for (double alpha : {1.5, 2.0}) {
        const Kernel kernel = Kernel::power(alpha, std::max(dist.diameter(), 1));
        MaximizeOptions options;
        options.restarts = 10;
        options.polish_iters = 1500;
        const MaximizeResult found = maximize_energy(g, dist, boundary, kernel, options);
        const BruteForceResult oracle = brute_force_max(g, dist, kernel, grid_steps);
        ++matched;
        const double delta = std::abs(found.energy - oracle.energy);
        if (found.interior_mass > 1e-6 || delta > 1e-6 * (1 + std::abs(oracle.energy))) {
          ++mismatched;
          if (delta > worst_delta) {
            worst_delta = delta;
            worst_case = "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) +
                         " g6=" + encode_graph6(g) + ": solver " + std::to_string(found.energy) +
                         " vs oracle " + std::to_string(oracle.energy) + " (interior mass " +
                         std::to_string(found.interior_mass) + ")";
          }
        }
      }
    }
  }
  if (pass && mismatched > 0) {
    pass = false;
    detail = std::to_string(mismatched) + " solver/oracle mismatches; worst: " + worst_case;
  }

  if (pass) {
    const Graph p5 = path_graph(5);
    const DistanceMatrix dist = all_pairs_distances(p5);
    const BoundarySet boundary = boundary_set(p5, dist);
    const MaximizeResult result =
        maximize_energy(p5, dist, boundary, Kernel::power(2.0, dist.diameter()));
    if (std::abs(result.energy - 8.0) > 1e-9 ||
        std::abs(result.mu.mass[0] - 0.5) > 1e-6 || std::abs(result.mu.mass[4] - 0.5) > 1e-6) {
      pass = false;
      detail = "P5 endpoint measure/energy 8 not recovered";
    }
  }

  if (pass) {
    std::ostringstream s;
    s << "500 strict improvements (min gain " << min_gain << "); solver == oracle with interior "
      << "mass <= 1e-6 on " << matched << " (graph, kernel) cases n<=7; P5 energy 8 at the "
      << "endpoint measure";
    detail = s.str();
  }
  report(12, pass, detail);
}

// 13. Scan determinism: identical bytes at any worker count, in process and
//     through the command-line tool.
void criterion_determinism(const std::vector<std::vector<Graph>>& small, const std::string& cli,
                           const std::string& scratch) {
  bool pass = true;
  std::string detail;

  std::vector<std::pair<std::string, std::string>> lines;
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : small[static_cast<size_t>(n)]) {
      lines.emplace_back("gen:" + std::to_string(lines.size()), encode_graph6(g));
    }
  }
  ScanOptions one;
  one.workers = 1;
  ScanOptions many;
  many.workers = 5;
  const ScanResult a = scan_lines(lines, one);
  const ScanResult b = scan_lines(lines, many);
  if (scan_to_json(a) != scan_to_json(b) || scan_to_csv(a) != scan_to_csv(b)) {
    pass = false;
    detail = "in-process scans differ across worker counts";
  }

  bool cli_checked = false;
  if (pass && !cli.empty()) {
    namespace fs = std::filesystem;
    fs::create_directories(scratch);
    const std::string corpus_path = scratch + "/corpus.g6";
    {
      std::ofstream out(corpus_path);
      for (const auto& [source, line] : lines) out << line << "\n";
      out << "A?\n";  // one skipped line
    }
    auto run = [&](int workers, const std::string& tag, bool json) {
      const std::string out_path = scratch + "/scan_" + tag + ".out";
      const std::string command = cli + " scan " + corpus_path + " --workers " +
                                  std::to_string(workers) + (json ? " --json" : "") + " > " +
                                  out_path + " 2>/dev/null";
      if (std::system(command.c_str()) != 0) return std::string();
      std::ifstream in(out_path, std::ios::binary);
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    };
    const std::string json1 = run(1, "j1", true);
    const std::string json4 = run(4, "j4", true);
    const std::string json1b = run(1, "j1b", true);
    const std::string csv1 = run(1, "c1", false);
    const std::string csv4 = run(4, "c4", false);
    cli_checked = true;
    if (json1.empty() || json1 != json4 || json1 != json1b || csv1.empty() || csv1 != csv4) {
      pass = false;
      detail = "CLI scan output differs across runs or worker counts";
    }
  }

  if (pass) {
    detail = "byte-identical reports over " + std::to_string(lines.size()) +
             " graphs at workers {1,5} in process" +
             (cli_checked ? " and workers {1,4} through the CLI (json+csv, repeated runs)"
                          : " (CLI path not provided)");
  }
  report(13, pass, detail);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  std::string scratch = "acceptance_scratch";
  for (int i = 1; i + 1 < argc; i += 2) {
    const std::string flag = argv[i];
    if (flag == "--cli") cli = argv[i + 1];
    if (flag == "--scratch") scratch = argv[i + 1];
  }

  // Connected graphs up to isomorphism, indexed by order.
  std::vector<std::vector<Graph>> small(9);
  for (int n = 1; n <= 8; ++n) small[static_cast<size_t>(n)] = testsupport::all_connected_graphs(n);
  const std::vector<AnalyzedGraph> corpus = analyze(testsupport::standard_corpus());

  criterion_boundary_ground_truth(small);
  criterion_equivalence(small);
  criterion_isoperimetric(corpus, small);
  criterion_exit_time(corpus, small);
  criterion_interval_walk();
  criterion_faber_krahn(corpus, small);
  criterion_survival_link(corpus);
  criterion_hardy(corpus, small);
  criterion_abp(corpus, small);
  criterion_ratio_bound(corpus, small);
  criterion_hotspots(corpus, small);
  criterion_energy(small);
  criterion_determinism(small, cli, scratch);

  if (failures == 0) {
    std::printf("acceptance: all 13 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criterion(s) failed\n", failures);
  return 1;
}
