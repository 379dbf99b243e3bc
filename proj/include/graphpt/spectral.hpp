#pragma once

#include <Eigen/Dense>
#include <optional>
#include <span>
#include <vector>

#include "graphpt/boundary.hpp"
#include "graphpt/distance.hpp"
#include "graphpt/graph.hpp"

namespace graphpt {

// Dense spectra are refused beyond this order rather than degrading accuracy.
inline constexpr int kSpectrumCap = 4000;

// Classification thresholds (deterministic under floating point).
inline constexpr double kPositiveEigGapFactor = 1e-8;   // times maxdeg
inline constexpr double kMultiplicityRelGap = 1e-6;
inline constexpr double kArgmaxTolFactor = 1e-8;        // times ||f||_inf

// (Lf)(v) = sum over neighbors w of (f(v) - f(w)).
std::vector<double> apply_laplacian(const Graph& g, std::span<const double> f);

struct LaplacianView {
  enum class Mode { neumann, dirichlet };

  Mode mode = Mode::neumann;
  std::vector<int> kept;  // vertex ids backing the rows/columns, ascending
  Eigen::MatrixXd matrix;
};

LaplacianView neumann_laplacian(const Graph& g);

// Restriction of D - A to V \ X (rows and columns of X erased).
LaplacianView dirichlet_laplacian(const Graph& g, std::span<const int> X);

// Same matrix built the other way: Laplacian of the induced subgraph on
// V \ X plus one diagonal unit per neighbor lost to X.
LaplacianView dirichlet_laplacian_via_subgraph(const Graph& g, std::span<const int> X);

double rayleigh_quotient(const Graph& g, std::span<const double> f);

struct Eigenpair {
  double value = 0;
  std::vector<double> vector;  // length n, zero-extended onto X in Dirichlet mode
  double residual = 0;
};

// Ground state of the Dirichlet Laplacian, entrywise nonnegative.
Eigenpair smallest_dirichlet_eigenpair(const Graph& g, std::span<const int> X);

// Solves (D - A) u = rhs on V \ X with u = boundary_values on X (zeros when
// boundary_values is empty). rhs entries on X are ignored. Direct sparse
// factorization up to 2000 interior vertices, conjugate gradient beyond;
// either way the residual is checked against 1e-10 * scale.
std::vector<double> dirichlet_solve(const Graph& g, std::span<const int> X,
                                    std::span<const double> rhs,
                                    std::span<const double> boundary_values = {});

struct FaberKrahnReport {
  std::optional<double> lambda1;  // empty iff interior is empty
  double bound = 0;               // mindeg / (4 diam^2)
  std::optional<double> q;        // lambda1 / mindeg
  bool interior_empty = false;
  bool holds = false;             // vacuously true when interior is empty
};

FaberKrahnReport faber_krahn_report(const Graph& g, const DistanceMatrix& dist,
                                    const BoundarySet& boundary);

struct NeumannSpectrum {
  Eigenpair pair;  // representative eigenvector of the lambda2 eigenspace
  int multiplicity = 1;
  std::vector<std::vector<double>> basis;
};

NeumannSpectrum neumann_second_eigenpair(const Graph& g);

enum class HotspotsVerdict { holds, violated, degenerate };

const char* to_string(HotspotsVerdict v);

struct HotspotsReport {
  double lambda2 = 0;
  int multiplicity = 1;
  struct VectorVerdict {
    bool max_in_boundary = false;
    bool min_in_boundary = false;
  };
  std::vector<VectorVerdict> verdicts;
  HotspotsVerdict overall = HotspotsVerdict::holds;
};

HotspotsReport hotspots_report(const Graph& g, const BoundarySet& boundary);

struct HotspotsRatioCheck {
  bool applicable = false;
  double lambda2 = 0;
  double ratio = 0;      // max over interior / max over boundary, sign-normalized
  double bound = 0;      // (1 - lambda2/mindeg)^-K with K = 2 maxdeg diam^2
  double log_bound = 0;  // overflow-safe form of the bound
  bool holds = true;     // vacuous when inapplicable
};

HotspotsRatioCheck hotspots_ratio_check(const Graph& g, const DistanceMatrix& dist,
                                        const BoundarySet& boundary);

}  // namespace graphpt
