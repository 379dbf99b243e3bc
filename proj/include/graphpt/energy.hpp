#pragma once

#include <span>
#include <vector>

#include "graphpt/boundary.hpp"
#include "graphpt/distance.hpp"
#include "graphpt/graph.hpp"
#include "graphpt/rng.hpp"

namespace graphpt {

// Distance kernel f(0), f(1), ..., f(max_distance) with monotonicity and
// convexity classified once from finite differences.
class Kernel {
 public:
  static Kernel from_values(std::vector<double> values);
  static Kernel power(double alpha, int max_distance);  // f(d) = d^alpha

  double operator()(int d) const { return values_[static_cast<size_t>(d)]; }
  int max_distance() const { return static_cast<int>(values_.size()) - 1; }

  bool nondecreasing() const { return nondecreasing_; }
  bool convex() const { return convex_; }
  bool strictly_convex() const { return strictly_convex_; }

  // Moves require a nondecreasing convex kernel; strict convexity upgrades
  // the improvement guarantee from weak to strict.
  bool admissible() const { return nondecreasing_ && convex_; }

 private:
  Kernel() = default;
  std::vector<double> values_;
  bool nondecreasing_ = false;
  bool convex_ = false;
  bool strictly_convex_ = false;
};

struct VertexMeasure {
  std::vector<double> mass;

  static VertexMeasure point_mass(int n, int v);
  static VertexMeasure uniform(int n);
  static VertexMeasure uniform_on(int n, std::span<const int> support);

  int order() const { return static_cast<int>(mass.size()); }
  void validate() const;  // entries >= 0, total mass 1 within 1e-12
};

// Full double sum including the diagonal f(0) mu(v)^2 terms.
double energy(const Graph& g, const DistanceMatrix& dist, const Kernel& kernel,
              const VertexMeasure& mu);

// Moves the whole atom at the interior vertex `a` uniformly onto its
// neighbors. Zero mass at `a` is a no-op. Never decreases the energy for an
// admissible kernel; strictly increases it when the kernel is strictly
// convex and mu(a) > 0.
VertexMeasure improvement_move(const Graph& g, const DistanceMatrix& dist, const Kernel& kernel,
                               const VertexMeasure& mu, int a);

inline constexpr long long kPurgeIterationCap = 1'000'000;

// Repeatedly moves the heaviest interior atom (ties to the smaller id) until
// the total interior mass is at most eps.
VertexMeasure purge_interior(const Graph& g, const DistanceMatrix& dist,
                             const BoundarySet& boundary, const Kernel& kernel,
                             VertexMeasure mu, double eps);

struct MaximizeOptions {
  int restarts = 16;
  RngSeed seed{};
  int polish_iters = 2000;
  double purge_eps = 1e-12;
};

struct MaximizeResult {
  VertexMeasure mu;
  double energy = 0;
  double interior_mass = 0;
};

// Multistart ascent: random simplex starts, multiplicative updates on the
// quadratic form, interleaved with interior purges. Deterministic given the
// seed; ties across restarts resolve to the smaller restart index.
MaximizeResult maximize_energy(const Graph& g, const DistanceMatrix& dist,
                               const BoundarySet& boundary, const Kernel& kernel,
                               const MaximizeOptions& options = {});

struct BruteForceResult {
  VertexMeasure mu;
  double energy = 0;
};

// Exhaustive simplex-grid search (denominators grid_steps) plus local
// polishing of the best candidates. Test oracle; exponential in n.
BruteForceResult brute_force_max(const Graph& g, const DistanceMatrix& dist,
                                 const Kernel& kernel, int grid_steps);

}  // namespace graphpt
