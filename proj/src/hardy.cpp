#include "graphpt/hardy.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

#include "graphpt/spectral.hpp"

namespace graphpt {

HardyWeight hardy_weight(const Graph& g, const BoundarySet& boundary,
                         const HittingPotential& phi) {
  if (static_cast<int>(phi.phi.size()) != g.order()) {
    fail(errc::length_mismatch, "phi has length " + std::to_string(phi.phi.size()));
  }
  HardyWeight weight;
  weight.phi = phi.phi;
  weight.w.assign(static_cast<size_t>(g.order()), std::numeric_limits<double>::quiet_NaN());
  for (int v = 0; v < g.order(); ++v) {
    if (boundary.contains(v)) continue;
    const double p = phi.phi[static_cast<size_t>(v)];
    if (!(p > 0)) fail(errc::invalid_argument, "phi not positive at interior vertex " + std::to_string(v));
    weight.w[static_cast<size_t>(v)] = -static_cast<double>(g.degree(v)) / p;
  }
  return weight;
}

double quadratic_form(const Graph& g, std::span<const double> w, std::span<const double> f) {
  if (static_cast<int>(w.size()) != g.order() || static_cast<int>(f.size()) != g.order()) {
    fail(errc::length_mismatch, "w/f length mismatch");
  }
  double q = 0;
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbors(v)) {
      if (u > v) {
        const double d = f[static_cast<size_t>(v)] - f[static_cast<size_t>(u)];
        q += d * d;
      }
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    const double fv = f[static_cast<size_t>(v)];
    if (fv == 0) continue;  // undefined weights contribute nothing
    const double wv = w[static_cast<size_t>(v)];
    if (std::isnan(wv)) {
      fail(errc::w_undefined_where_f_nonzero, "vertex " + std::to_string(v));
    }
    q += wv * fv * fv;
  }
  return q;
}

bool aap_supersolution_check(const Graph& g, std::span<const double> w,
                             std::span<const double> phi, std::span<const int> X) {
  if (static_cast<int>(w.size()) != g.order() || static_cast<int>(phi.size()) != g.order()) {
    fail(errc::length_mismatch, "w/phi length mismatch");
  }
  const std::vector<char> mask = vertex_mask(g, X);
  for (int v = 0; v < g.order(); ++v) {
    if (mask[static_cast<size_t>(v)]) continue;
    const double p = phi[static_cast<size_t>(v)];
    if (!(p > 0)) return false;
    const double wv = w[static_cast<size_t>(v)];
    if (std::isnan(wv)) fail(errc::invalid_argument, "W undefined at interior vertex " + std::to_string(v));
    double lap = 0;
    for (int u : g.neighbors(v)) lap += p - phi[static_cast<size_t>(u)];
    if (lap + wv * p < -1e-12) return false;
  }
  return true;
}

HardyCheck hardy_check(const Graph& g, const BoundarySet& boundary,
                       const HittingPotential& phi, std::span<const double> f) {
  if (static_cast<int>(f.size()) != g.order() || static_cast<int>(phi.phi.size()) != g.order()) {
    fail(errc::length_mismatch, "f/phi length mismatch");
  }
  for (int v : boundary.members) {
    if (f[static_cast<size_t>(v)] != 0) {
      fail(errc::f_not_vanishing_on_boundary, "vertex " + std::to_string(v));
    }
  }
  HardyCheck check;
  for (int v = 0; v < g.order(); ++v) {
    for (int u : g.neighbors(v)) {
      if (u > v) {
        const double d = f[static_cast<size_t>(v)] - f[static_cast<size_t>(u)];
        check.lhs += d * d;
      }
    }
  }
  for (int v = 0; v < g.order(); ++v) {
    if (boundary.contains(v)) continue;
    const double fv = f[static_cast<size_t>(v)];
    if (fv == 0) continue;
    const double p = phi.phi[static_cast<size_t>(v)];
    if (!(p > 0)) fail(errc::invalid_argument, "phi not positive at interior vertex " + std::to_string(v));
    check.rhs += g.degree(v) * fv * fv / p;
  }
  check.holds = check.lhs >= check.rhs - 1e-9 * check.lhs;
  return check;
}

double hardy_certificate(const Graph& g, const BoundarySet& boundary,
                         const HittingPotential& phi) {
  if (boundary.size() == g.order()) fail(errc::interior_empty, "boundary covers all vertices");
  LaplacianView view = dirichlet_laplacian(g, boundary.members);
  for (size_t i = 0; i < view.kept.size(); ++i) {
    const int v = view.kept[i];
    const double p = phi.phi[static_cast<size_t>(v)];
    if (!(p > 0)) fail(errc::invalid_argument, "phi not positive at interior vertex " + std::to_string(v));
    view.matrix(static_cast<int>(i), static_cast<int>(i)) -= g.degree(v) / p;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(view.matrix);
  if (solver.info() != Eigen::Success) fail(errc::internal_error, "eigensolver failed");
  return solver.eigenvalues()(0);
}

}  // namespace graphpt
