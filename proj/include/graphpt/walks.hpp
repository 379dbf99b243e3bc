#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graphpt/graph.hpp"
#include "graphpt/rational.hpp"
#include "graphpt/rng.hpp"

namespace graphpt {

inline constexpr std::uint64_t kWalkStepCap = 1'000'000'000;

// Expected number of steps for a uniform random walk to first reach the
// absorbing set, per start vertex. phi vanishes on the absorbing set and
// satisfies (D - A) phi = deg on the rest, certified by a residual check.
struct HittingPotential {
  std::vector<double> phi;
  std::vector<int> absorbing;  // sorted

  double max() const;
};

HittingPotential hitting_potential(const Graph& g, std::span<const int> absorbing);

// One absorbed walk; returns the first step index at which the position lies
// in the absorbing set (0 if the start is already absorbed).
std::uint64_t simulate_exit_time(const Graph& g, std::span<const int> absorbing, int v0,
                                 RngSeed seed);

struct ExitTimeEstimate {
  double mean = 0;
  double stderr_ = 0;
  std::uint64_t trials = 0;
};

// Monte-Carlo mean/standard error over independent substreams, one per trial.
ExitTimeEstimate estimate_exit_time(const Graph& g, std::span<const int> absorbing, int v0,
                                    std::uint64_t trials, RngSeed seed);

// Distribution of the absorbed walk after `step` steps: interior mass moves
// uniformly over neighbors, absorbed mass stays put.
struct WalkDistribution {
  std::vector<double> mass;
  int step = 0;

  double mass_on(std::span<const int> vertices) const;
};

WalkDistribution walk_distribution(const Graph& g, std::span<const int> absorbing, int v0,
                                   int steps);

// Unbiased walk on {-m, ..., m} with absorbing endpoints, started at x0.
// Exact transfer-operator tail P(T >= k) for the first hitting time T of +-m.
double interval_tail_exact(int radius, int start, int steps);

// Exact expected hitting time, solved in rational arithmetic.
Rational interval_mean_exact(int radius, int start);

}  // namespace graphpt
