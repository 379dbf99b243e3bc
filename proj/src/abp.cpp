#include "graphpt/abp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "graphpt/spectral.hpp"

namespace graphpt {

double TorsionFunction::max() const {
  double best = 0;
  for (double v : u) best = std::max(best, v);
  return best;
}

TorsionFunction torsion_function(const Graph& g, std::span<const int> X) {
  const std::vector<int> xs = sorted_vertex_set(g, X);
  if (xs.empty()) fail(errc::empty_x, "X is empty");
  if (static_cast<int>(xs.size()) == g.order()) fail(errc::x_covers_all_vertices, "X = V");

  TorsionFunction torsion;
  torsion.x = xs;
  const std::vector<double> ones(static_cast<size_t>(g.order()), 1.0);
  torsion.u = dirichlet_solve(g, xs, ones);

  const std::vector<char> mask = vertex_mask(g, xs);
  for (int v = 0; v < g.order(); ++v) {
    if (!mask[static_cast<size_t>(v)] && !(torsion.u[static_cast<size_t>(v)] > 0)) {
      fail(errc::internal_error, "torsion not positive at vertex " + std::to_string(v));
    }
  }
  return torsion;
}

double abp_sharp_constant(const Graph& g, std::span<const int> X) {
  return torsion_function(g, X).max();
}

AbpCheck abp_check(const Graph& g, const DistanceMatrix& dist, const BoundarySet& boundary,
                   std::span<const double> f) {
  if (static_cast<int>(f.size()) != g.order()) {
    fail(errc::length_mismatch, "f has length " + std::to_string(f.size()));
  }
  if (boundary.members.empty()) fail(errc::degenerate_graph, "empty boundary");

  AbpCheck check;
  check.lhs = *std::max_element(f.begin(), f.end());

  double boundary_max = -std::numeric_limits<double>::infinity();
  for (int v : boundary.members) boundary_max = std::max(boundary_max, f[static_cast<size_t>(v)]);

  const std::vector<double> lap = apply_laplacian(g, f);
  double sup = 0, sup_pos = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (boundary.contains(v)) continue;
    sup = std::max(sup, std::abs(lap[static_cast<size_t>(v)]));
    sup_pos = std::max(sup_pos, lap[static_cast<size_t>(v)]);
  }

  const auto [mindeg, maxdeg] = g.degree_extremes();
  const double diam = dist.diameter();
  const double coefficient = 2.0 * maxdeg / mindeg * diam * diam;
  check.rhs = boundary_max + coefficient * sup;
  check.one_sided_rhs = boundary_max + coefficient * sup_pos;
  check.holds = check.lhs <= check.rhs + 1e-9;
  return check;
}

}  // namespace graphpt
