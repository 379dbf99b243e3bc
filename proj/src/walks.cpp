#include "graphpt/walks.hpp"

#include <algorithm>
#include <cmath>

#include "graphpt/spectral.hpp"

namespace graphpt {

double HittingPotential::max() const {
  double best = 0;
  for (double x : phi) best = std::max(best, x);
  return best;
}

HittingPotential hitting_potential(const Graph& g, std::span<const int> absorbing) {
  const std::vector<int> abs_set = sorted_vertex_set(g, absorbing);
  if (abs_set.empty()) fail(errc::empty_absorbing_set, "absorbing set is empty");

  HittingPotential hp;
  hp.absorbing = abs_set;
  if (static_cast<int>(abs_set.size()) == g.order()) {
    hp.phi.assign(static_cast<size_t>(g.order()), 0.0);
    return hp;
  }
  std::vector<double> deg(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) deg[static_cast<size_t>(v)] = g.degree(v);
  hp.phi = dirichlet_solve(g, abs_set, deg);
  return hp;
}

std::uint64_t simulate_exit_time(const Graph& g, std::span<const int> absorbing, int v0,
                                 RngSeed seed) {
  g.check_vertex(v0);
  const std::vector<char> mask = vertex_mask(g, absorbing);
  bool any = false;
  for (char c : mask) any |= (c != 0);
  if (!any) fail(errc::empty_absorbing_set, "absorbing set is empty");

  CounterRng rng(seed);
  int pos = v0;
  std::uint64_t steps = 0;
  while (!mask[static_cast<size_t>(pos)]) {
    if (steps >= kWalkStepCap) fail(errc::walk_cap_exceeded, "cap " + std::to_string(kWalkStepCap));
    const auto nbrs = g.neighbors(pos);
    pos = nbrs[rng.next_below(static_cast<std::uint32_t>(nbrs.size()))];
    ++steps;
  }
  return steps;
}

ExitTimeEstimate estimate_exit_time(const Graph& g, std::span<const int> absorbing, int v0,
                                    std::uint64_t trials, RngSeed seed) {
  if (trials < 1) fail(errc::invalid_argument, "trials must be positive");
  double mean = 0;
  double m2 = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double x =
        static_cast<double>(simulate_exit_time(g, absorbing, v0, CounterRng::substream(seed, t)));
    const double delta = x - mean;
    mean += delta / static_cast<double>(t + 1);
    m2 += delta * (x - mean);
  }
  ExitTimeEstimate est;
  est.mean = mean;
  est.trials = trials;
  if (trials > 1) {
    const double variance = m2 / static_cast<double>(trials - 1);
    est.stderr_ = std::sqrt(variance / static_cast<double>(trials));
  }
  return est;
}

double WalkDistribution::mass_on(std::span<const int> vertices) const {
  double total = 0;
  for (int v : vertices) total += mass[static_cast<size_t>(v)];
  return total;
}

WalkDistribution walk_distribution(const Graph& g, std::span<const int> absorbing, int v0,
                                   int steps) {
  g.check_vertex(v0);
  if (steps < 0) fail(errc::invalid_argument, "negative step count");
  const std::vector<char> mask = vertex_mask(g, absorbing);

  WalkDistribution dist;
  dist.mass.assign(static_cast<size_t>(g.order()), 0.0);
  dist.mass[static_cast<size_t>(v0)] = 1.0;
  std::vector<double> next(dist.mass.size());
  for (int k = 0; k < steps; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int v = 0; v < g.order(); ++v) {
      const double m = dist.mass[static_cast<size_t>(v)];
      if (m == 0) continue;
      if (mask[static_cast<size_t>(v)]) {
        next[static_cast<size_t>(v)] += m;
      } else {
        const double share = m / g.degree(v);
        for (int w : g.neighbors(v)) next[static_cast<size_t>(w)] += share;
      }
    }
    dist.mass.swap(next);
  }
  dist.step = steps;
  return dist;
}

double interval_tail_exact(int radius, int start, int steps) {
  if (radius < 1) fail(errc::invalid_argument, "radius must be >= 1");
  if (std::abs(start) > radius) fail(errc::invalid_argument, "start outside the interval");
  if (steps < 0) fail(errc::invalid_argument, "negative step count");
  if (steps == 0) return 1.0;  // T >= 0 always
  if (std::abs(start) == radius) return 0.0;

  // Interior positions -radius+1 .. radius-1; mass escaping to the endpoints
  // is dropped, so the remaining total is the survival probability.
  const int width = 2 * radius - 1;
  std::vector<double> mass(static_cast<size_t>(width), 0.0);
  mass[static_cast<size_t>(start + radius - 1)] = 1.0;
  std::vector<double> next(mass.size());
  for (int k = 0; k < steps - 1; ++k) {
    std::fill(next.begin(), next.end(), 0.0);
    for (int i = 0; i < width; ++i) {
      const double half = 0.5 * mass[static_cast<size_t>(i)];
      if (half == 0) continue;
      if (i > 0) next[static_cast<size_t>(i - 1)] += half;
      if (i + 1 < width) next[static_cast<size_t>(i + 1)] += half;
    }
    mass.swap(next);
  }
  double survival = 0;
  for (double m : mass) survival += m;
  return survival;
}

Rational interval_mean_exact(int radius, int start) {
  if (radius < 1) fail(errc::invalid_argument, "radius must be >= 1");
  if (std::abs(start) > radius) fail(errc::invalid_argument, "start outside the interval");
  if (std::abs(start) == radius) return Rational(0);

  // T(x) = 1 + (T(x-1) + T(x+1)) / 2 on the interior, T(+-radius) = 0;
  // forward elimination of the tridiagonal system in exact rationals.
  const int width = 2 * radius - 1;
  std::vector<Rational> diag(static_cast<size_t>(width), Rational(1));
  std::vector<Rational> rhs(static_cast<size_t>(width), Rational(1));
  const Rational off(-1, 2);
  for (int i = 1; i < width; ++i) {
    const Rational factor = off / diag[static_cast<size_t>(i - 1)];
    diag[static_cast<size_t>(i)] = diag[static_cast<size_t>(i)] - factor * off;
    rhs[static_cast<size_t>(i)] = rhs[static_cast<size_t>(i)] - factor * rhs[static_cast<size_t>(i - 1)];
  }
  std::vector<Rational> solution(static_cast<size_t>(width));
  solution[static_cast<size_t>(width - 1)] =
      rhs[static_cast<size_t>(width - 1)] / diag[static_cast<size_t>(width - 1)];
  for (int i = width - 2; i >= 0; --i) {
    solution[static_cast<size_t>(i)] =
        (rhs[static_cast<size_t>(i)] - off * solution[static_cast<size_t>(i + 1)]) /
        diag[static_cast<size_t>(i)];
  }
  return solution[static_cast<size_t>(start + radius - 1)];
}

}  // namespace graphpt
