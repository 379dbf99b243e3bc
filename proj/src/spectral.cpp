#include "graphpt/spectral.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/IterativeLinearSolvers>
#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <limits>

namespace graphpt {

std::vector<double> apply_laplacian(const Graph& g, std::span<const double> f) {
  if (static_cast<int>(f.size()) != g.order()) {
    fail(errc::length_mismatch, "f has length " + std::to_string(f.size()));
  }
  std::vector<double> out(f.size(), 0.0);
  for (int v = 0; v < g.order(); ++v) {
    double acc = 0;
    for (int w : g.neighbors(v)) acc += f[static_cast<size_t>(v)] - f[static_cast<size_t>(w)];
    out[static_cast<size_t>(v)] = acc;
  }
  return out;
}

namespace {

void check_spectrum_size(int order) {
  if (order > kSpectrumCap) {
    fail(errc::spectrum_too_large,
         std::to_string(order) + " rows exceed the dense cap " + std::to_string(kSpectrumCap));
  }
}

std::vector<int> interior_of(const Graph& g, std::span<const int> X) {
  const std::vector<int> xs = sorted_vertex_set(g, X);
  if (xs.empty()) fail(errc::empty_x, "X is empty");
  if (static_cast<int>(xs.size()) == g.order()) fail(errc::x_covers_all_vertices, "X = V");
  std::vector<char> mask(static_cast<size_t>(g.order()), 0);
  for (int v : xs) mask[static_cast<size_t>(v)] = 1;
  std::vector<int> interior;
  interior.reserve(static_cast<size_t>(g.order()) - xs.size());
  for (int v = 0; v < g.order(); ++v) {
    if (!mask[static_cast<size_t>(v)]) interior.push_back(v);
  }
  return interior;
}

}  // namespace

LaplacianView neumann_laplacian(const Graph& g) {
  check_spectrum_size(g.order());
  LaplacianView view;
  view.mode = LaplacianView::Mode::neumann;
  view.kept.resize(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) view.kept[static_cast<size_t>(v)] = v;
  view.matrix = Eigen::MatrixXd::Zero(g.order(), g.order());
  for (int v = 0; v < g.order(); ++v) {
    view.matrix(v, v) = g.degree(v);
    for (int w : g.neighbors(v)) view.matrix(v, w) = -1.0;
  }
  return view;
}

LaplacianView dirichlet_laplacian(const Graph& g, std::span<const int> X) {
  std::vector<int> interior = interior_of(g, X);
  check_spectrum_size(static_cast<int>(interior.size()));
  std::vector<int> pos(static_cast<size_t>(g.order()), -1);
  for (size_t i = 0; i < interior.size(); ++i) pos[static_cast<size_t>(interior[i])] = static_cast<int>(i);

  LaplacianView view;
  view.mode = LaplacianView::Mode::dirichlet;
  view.matrix = Eigen::MatrixXd::Zero(static_cast<int>(interior.size()), static_cast<int>(interior.size()));
  for (size_t i = 0; i < interior.size(); ++i) {
    const int v = interior[i];
    view.matrix(static_cast<int>(i), static_cast<int>(i)) = g.degree(v);
    for (int w : g.neighbors(v)) {
      const int j = pos[static_cast<size_t>(w)];
      if (j >= 0) view.matrix(static_cast<int>(i), j) = -1.0;
    }
  }
  view.kept = std::move(interior);
  return view;
}

LaplacianView dirichlet_laplacian_via_subgraph(const Graph& g, std::span<const int> X) {
  std::vector<int> interior = interior_of(g, X);
  check_spectrum_size(static_cast<int>(interior.size()));
  std::vector<int> pos(static_cast<size_t>(g.order()), -1);
  for (size_t i = 0; i < interior.size(); ++i) pos[static_cast<size_t>(interior[i])] = static_cast<int>(i);

  LaplacianView view;
  view.mode = LaplacianView::Mode::dirichlet;
  view.matrix = Eigen::MatrixXd::Zero(static_cast<int>(interior.size()), static_cast<int>(interior.size()));
  for (size_t i = 0; i < interior.size(); ++i) {
    const int v = interior[i];
    int interior_degree = 0;
    int boundary_neighbors = 0;
    for (int w : g.neighbors(v)) {
      const int j = pos[static_cast<size_t>(w)];
      if (j >= 0) {
        ++interior_degree;
        view.matrix(static_cast<int>(i), j) = -1.0;
      } else {
        ++boundary_neighbors;
      }
    }
    view.matrix(static_cast<int>(i), static_cast<int>(i)) = interior_degree + boundary_neighbors;
  }
  view.kept = std::move(interior);
  return view;
}

double rayleigh_quotient(const Graph& g, std::span<const double> f) {
  if (static_cast<int>(f.size()) != g.order()) {
    fail(errc::length_mismatch, "f has length " + std::to_string(f.size()));
  }
  double denom = 0;
  for (double x : f) denom += x * x;
  if (denom == 0) fail(errc::zero_function, "f vanishes identically");
  double numer = 0;
  for (int v = 0; v < g.order(); ++v) {
    for (int w : g.neighbors(v)) {
      if (w > v) {
        const double d = f[static_cast<size_t>(v)] - f[static_cast<size_t>(w)];
        numer += d * d;
      }
    }
  }
  return numer / denom;
}

namespace {

double eigen_residual(const Eigen::MatrixXd& m, const Eigen::VectorXd& v, double lambda) {
  return (m * v - lambda * v).norm();
}

}  // namespace

Eigenpair smallest_dirichlet_eigenpair(const Graph& g, std::span<const int> X) {
  const LaplacianView view = dirichlet_laplacian(g, X);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(view.matrix);
  if (solver.info() != Eigen::Success) fail(errc::internal_error, "eigensolver failed");
  const double lambda = solver.eigenvalues()(0);
  // The ground state of this M-matrix is sign-definite per interior
  // component; the entrywise absolute value stays in the eigenspace.
  Eigen::VectorXd vec = solver.eigenvectors().col(0).cwiseAbs();
  vec.normalize();

  Eigenpair pair;
  pair.value = lambda;
  pair.residual = eigen_residual(view.matrix, vec, lambda);
  pair.vector.assign(static_cast<size_t>(g.order()), 0.0);
  for (size_t i = 0; i < view.kept.size(); ++i) {
    pair.vector[static_cast<size_t>(view.kept[i])] = vec(static_cast<int>(i));
  }
  return pair;
}

std::vector<double> dirichlet_solve(const Graph& g, std::span<const int> X,
                                    std::span<const double> rhs,
                                    std::span<const double> boundary_values) {
  if (static_cast<int>(rhs.size()) != g.order()) {
    fail(errc::length_mismatch, "rhs has length " + std::to_string(rhs.size()));
  }
  if (!boundary_values.empty() && static_cast<int>(boundary_values.size()) != g.order()) {
    fail(errc::length_mismatch, "boundary values have length " + std::to_string(boundary_values.size()));
  }
  const std::vector<int> xs = sorted_vertex_set(g, X);
  if (xs.empty()) fail(errc::empty_x, "X is empty");

  std::vector<double> out(static_cast<size_t>(g.order()), 0.0);
  if (!boundary_values.empty()) {
    for (int v : xs) out[static_cast<size_t>(v)] = boundary_values[static_cast<size_t>(v)];
  }
  if (static_cast<int>(xs.size()) == g.order()) return out;

  std::vector<int> pos(static_cast<size_t>(g.order()), -1);
  std::vector<int> interior;
  {
    std::vector<char> mask(static_cast<size_t>(g.order()), 0);
    for (int v : xs) mask[static_cast<size_t>(v)] = 1;
    for (int v = 0; v < g.order(); ++v) {
      if (!mask[static_cast<size_t>(v)]) {
        pos[static_cast<size_t>(v)] = static_cast<int>(interior.size());
        interior.push_back(v);
      }
    }
  }

  const int k = static_cast<int>(interior.size());
  Eigen::SparseMatrix<double> mat(k, k);
  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(static_cast<size_t>(k) * 4);
  Eigen::VectorXd b(k);
  for (int i = 0; i < k; ++i) {
    const int v = interior[static_cast<size_t>(i)];
    triplets.emplace_back(i, i, static_cast<double>(g.degree(v)));
    double bi = rhs[static_cast<size_t>(v)];
    for (int w : g.neighbors(v)) {
      const int j = pos[static_cast<size_t>(w)];
      if (j >= 0) {
        triplets.emplace_back(i, j, -1.0);
      } else if (!boundary_values.empty()) {
        bi += boundary_values[static_cast<size_t>(w)];
      }
    }
    b(i) = bi;
  }
  mat.setFromTriplets(triplets.begin(), triplets.end());

  Eigen::VectorXd solution;
  if (k <= 2000) {
    Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(mat);
    if (solver.info() != Eigen::Success) fail(errc::internal_error, "factorization failed");
    solution = solver.solve(b);
  } else {
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> solver;
    solver.setTolerance(1e-14);
    solver.setMaxIterations(static_cast<Eigen::Index>(k) * 40);
    solver.compute(mat);
    solution = solver.solve(b);
  }

  const double scale = std::max(1.0, b.cwiseAbs().maxCoeff());
  const double residual = (mat * solution - b).cwiseAbs().maxCoeff();
  if (!(residual <= 1e-10 * scale)) {
    fail(errc::internal_error, "Dirichlet solve residual " + std::to_string(residual));
  }

  for (int i = 0; i < k; ++i) out[static_cast<size_t>(interior[static_cast<size_t>(i)])] = solution(i);
  return out;
}

FaberKrahnReport faber_krahn_report(const Graph& g, const DistanceMatrix& dist,
                                    const BoundarySet& boundary) {
  const auto [mindeg, maxdeg] = g.degree_extremes();
  (void)maxdeg;
  const double diam = dist.diameter();
  FaberKrahnReport report;
  report.bound = diam > 0 ? 0.25 * mindeg / (diam * diam) : 0.0;
  report.interior_empty = boundary.size() == g.order();
  if (report.interior_empty) {
    report.holds = true;  // vacuous: no admissible f
    return report;
  }
  const Eigenpair pair = smallest_dirichlet_eigenpair(g, boundary.members);
  report.lambda1 = pair.value;
  report.q = pair.value / mindeg;
  report.holds = pair.value >= report.bound - 1e-9;
  return report;
}

NeumannSpectrum neumann_second_eigenpair(const Graph& g) {
  if (g.order() < 2) fail(errc::invalid_argument, "need at least 2 vertices");
  const LaplacianView view = neumann_laplacian(g);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(view.matrix);
  if (solver.info() != Eigen::Success) fail(errc::internal_error, "eigensolver failed");
  const auto& values = solver.eigenvalues();
  const auto [mindeg, maxdeg] = g.degree_extremes();
  (void)mindeg;
  const double positive_gap = kPositiveEigGapFactor * maxdeg;

  int first = -1;
  for (int i = 0; i < values.size(); ++i) {
    if (values(i) > positive_gap) {
      first = i;
      break;
    }
  }
  if (first < 0) fail(errc::internal_error, "no positive eigenvalue found");
  const double lambda2 = values(first);

  NeumannSpectrum spectrum;
  int last = first;
  while (last + 1 < values.size() &&
         values(last + 1) - lambda2 < kMultiplicityRelGap * std::max(lambda2, 1.0)) {
    ++last;
  }
  spectrum.multiplicity = last - first + 1;
  for (int i = first; i <= last; ++i) {
    const Eigen::VectorXd col = solver.eigenvectors().col(i);
    spectrum.basis.emplace_back(col.data(), col.data() + col.size());
  }
  spectrum.pair.value = lambda2;
  spectrum.pair.vector = spectrum.basis.front();
  {
    const Eigen::VectorXd rep = solver.eigenvectors().col(first);
    spectrum.pair.residual = eigen_residual(view.matrix, rep, lambda2);
  }
  return spectrum;
}

const char* to_string(HotspotsVerdict v) {
  switch (v) {
    case HotspotsVerdict::holds: return "Holds";
    case HotspotsVerdict::violated: return "Violated";
    case HotspotsVerdict::degenerate: return "Degenerate";
  }
  return "?";
}

namespace {

// Vertices within tolerance of the extreme value of f.
std::vector<int> extremal_set(std::span<const double> f, bool maximum) {
  double best = maximum ? *std::max_element(f.begin(), f.end())
                        : *std::min_element(f.begin(), f.end());
  double norm = 0;
  for (double x : f) norm = std::max(norm, std::abs(x));
  const double tol = kArgmaxTolFactor * norm;
  std::vector<int> out;
  for (size_t v = 0; v < f.size(); ++v) {
    if (maximum ? f[v] >= best - tol : f[v] <= best + tol) out.push_back(static_cast<int>(v));
  }
  return out;
}

bool meets_boundary(const std::vector<int>& vertices, const BoundarySet& boundary) {
  return std::any_of(vertices.begin(), vertices.end(),
                     [&](int v) { return boundary.contains(v); });
}

}  // namespace

HotspotsReport hotspots_report(const Graph& g, const BoundarySet& boundary) {
  const NeumannSpectrum spectrum = neumann_second_eigenpair(g);
  HotspotsReport report;
  report.lambda2 = spectrum.pair.value;
  report.multiplicity = spectrum.multiplicity;

  int held = 0;
  for (const auto& f : spectrum.basis) {
    HotspotsReport::VectorVerdict verdict;
    verdict.max_in_boundary = meets_boundary(extremal_set(f, true), boundary);
    verdict.min_in_boundary = meets_boundary(extremal_set(f, false), boundary);
    if (verdict.max_in_boundary && verdict.min_in_boundary) ++held;
    report.verdicts.push_back(verdict);
  }

  const int total = static_cast<int>(report.verdicts.size());
  if (held == total) {
    report.overall = HotspotsVerdict::holds;
  } else if (report.multiplicity > 1 && held > 0) {
    report.overall = HotspotsVerdict::degenerate;
  } else {
    report.overall = HotspotsVerdict::violated;
  }
  return report;
}

HotspotsRatioCheck hotspots_ratio_check(const Graph& g, const DistanceMatrix& dist,
                                        const BoundarySet& boundary) {
  const NeumannSpectrum spectrum = neumann_second_eigenpair(g);
  HotspotsRatioCheck check;
  check.lambda2 = spectrum.pair.value;
  // "lambda2 < 1" with a deterministic margin: eigenvalues that are exactly 1
  // in exact arithmetic (paths of 3 vertices, stars) must not slip through.
  if (spectrum.multiplicity != 1 || !(check.lambda2 < 1.0 - 1e-9)) return check;
  if (boundary.size() == g.order()) return check;  // no interior to bound

  std::vector<double> f = spectrum.basis.front();
  double boundary_max_plus = -std::numeric_limits<double>::infinity();
  double boundary_max_minus = -std::numeric_limits<double>::infinity();
  for (int v : boundary.members) {
    boundary_max_plus = std::max(boundary_max_plus, f[static_cast<size_t>(v)]);
    boundary_max_minus = std::max(boundary_max_minus, -f[static_cast<size_t>(v)]);
  }
  if (boundary_max_minus > boundary_max_plus) {
    for (double& x : f) x = -x;
    std::swap(boundary_max_plus, boundary_max_minus);
  }
  if (!(boundary_max_plus > 0)) return check;  // nonpositive boundary maxima

  double interior_max = -std::numeric_limits<double>::infinity();
  for (int v = 0; v < g.order(); ++v) {
    if (!boundary.contains(v)) interior_max = std::max(interior_max, f[static_cast<size_t>(v)]);
  }

  const auto [mindeg, maxdeg] = g.degree_extremes();
  const double diam = dist.diameter();
  const double exponent = 2.0 * maxdeg * diam * diam;
  check.applicable = true;
  check.ratio = interior_max / boundary_max_plus;
  check.log_bound = -exponent * std::log1p(-check.lambda2 / mindeg);
  check.bound = std::exp(check.log_bound);
  check.holds = check.ratio <= 0 || std::log(check.ratio) <= check.log_bound + 1e-12;
  return check;
}

}  // namespace graphpt
