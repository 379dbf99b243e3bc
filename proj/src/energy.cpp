#include "graphpt/energy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace graphpt {

Kernel Kernel::from_values(std::vector<double> values) {
  if (values.empty()) fail(errc::kernel_not_admissible, "no kernel values");
  for (double v : values) {
    if (!std::isfinite(v)) fail(errc::kernel_not_admissible, "non-finite kernel value");
  }
  Kernel k;
  k.values_ = std::move(values);
  k.nondecreasing_ = true;
  k.convex_ = true;
  k.strictly_convex_ = true;
  for (size_t i = 1; i < k.values_.size(); ++i) {
    if (k.values_[i] < k.values_[i - 1]) k.nondecreasing_ = false;
    if (i >= 2) {
      const double second = k.values_[i] - 2 * k.values_[i - 1] + k.values_[i - 2];
      if (second < 0) k.convex_ = false;
      if (!(second > 0)) k.strictly_convex_ = false;
    }
  }
  if (!k.convex_) k.strictly_convex_ = false;
  return k;
}

Kernel Kernel::power(double alpha, int max_distance) {
  if (!(alpha > 0)) fail(errc::kernel_not_admissible, "alpha must be positive");
  if (max_distance < 0) fail(errc::invalid_argument, "negative max distance");
  std::vector<double> values(static_cast<size_t>(max_distance) + 1);
  for (int d = 0; d <= max_distance; ++d) {
    values[static_cast<size_t>(d)] = std::pow(static_cast<double>(d), alpha);
  }
  return from_values(std::move(values));
}

VertexMeasure VertexMeasure::point_mass(int n, int v) {
  VertexMeasure mu;
  mu.mass.assign(static_cast<size_t>(n), 0.0);
  mu.mass.at(static_cast<size_t>(v)) = 1.0;
  return mu;
}

VertexMeasure VertexMeasure::uniform(int n) {
  VertexMeasure mu;
  mu.mass.assign(static_cast<size_t>(n), 1.0 / n);
  return mu;
}

VertexMeasure VertexMeasure::uniform_on(int n, std::span<const int> support) {
  if (support.empty()) fail(errc::invalid_argument, "empty support");
  VertexMeasure mu;
  mu.mass.assign(static_cast<size_t>(n), 0.0);
  for (int v : support) mu.mass.at(static_cast<size_t>(v)) = 1.0 / static_cast<double>(support.size());
  return mu;
}

void VertexMeasure::validate() const {
  double total = 0;
  for (double m : mass) {
    if (!(m >= 0)) fail(errc::not_a_measure, "negative mass entry");
    total += m;
  }
  if (std::abs(total - 1.0) > 1e-12) {
    fail(errc::not_a_measure, "total mass " + std::to_string(total));
  }
}

namespace {

void check_kernel_domain(const Kernel& kernel, const DistanceMatrix& dist) {
  if (kernel.max_distance() < dist.diameter()) {
    fail(errc::invalid_argument, "kernel shorter than the diameter");
  }
}

// Dense kernel-of-distance matrix, row-major.
std::vector<double> kernel_matrix(const DistanceMatrix& dist, const Kernel& kernel) {
  const int n = dist.order();
  std::vector<double> f(static_cast<size_t>(n) * n);
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) f[static_cast<size_t>(v) * n + w] = kernel(dist(v, w));
  }
  return f;
}

double quadratic_energy(const std::vector<double>& f, std::span<const double> mass) {
  const int n = static_cast<int>(mass.size());
  double total = 0;
  for (int v = 0; v < n; ++v) {
    const double mv = mass[static_cast<size_t>(v)];
    if (mv == 0) continue;
    double row = 0;
    for (int w = 0; w < n; ++w) row += f[static_cast<size_t>(v) * n + w] * mass[static_cast<size_t>(w)];
    total += mv * row;
  }
  return total;
}

bool in_boundary(const Graph& g, const DistanceMatrix& dist, int a) {
  for (int w = 0; w < g.order(); ++w) {
    if (w != a && is_witnessed(g, dist, a, w)) return true;
  }
  return false;
}

VertexMeasure move_unchecked(const Graph& g, const VertexMeasure& mu, int a) {
  VertexMeasure nu = mu;
  const double atom = mu.mass[static_cast<size_t>(a)];
  const double share = atom / g.degree(a);
  nu.mass[static_cast<size_t>(a)] = 0.0;
  for (int w : g.neighbors(a)) nu.mass[static_cast<size_t>(w)] += share;
  return nu;
}

}  // namespace

double energy(const Graph& g, const DistanceMatrix& dist, const Kernel& kernel,
              const VertexMeasure& mu) {
  if (mu.order() != g.order()) fail(errc::length_mismatch, "measure size mismatch");
  check_kernel_domain(kernel, dist);
  mu.validate();
  const int n = g.order();
  double total = 0;
  for (int v = 0; v < n; ++v) {
    const double mv = mu.mass[static_cast<size_t>(v)];
    if (mv == 0) continue;
    double row = 0;
    for (int w = 0; w < n; ++w) row += kernel(dist(v, w)) * mu.mass[static_cast<size_t>(w)];
    total += mv * row;
  }
  return total;
}

VertexMeasure improvement_move(const Graph& g, const DistanceMatrix& dist, const Kernel& kernel,
                               const VertexMeasure& mu, int a) {
  g.check_vertex(a);
  if (mu.order() != g.order()) fail(errc::length_mismatch, "measure size mismatch");
  check_kernel_domain(kernel, dist);
  mu.validate();
  if (!kernel.admissible()) {
    fail(errc::kernel_not_admissible, "kernel must be nondecreasing and convex");
  }
  if (g.degree(a) == 0) fail(errc::invalid_argument, "isolated vertex");
  if (in_boundary(g, dist, a)) fail(errc::vertex_in_boundary, "vertex " + std::to_string(a));
  if (mu.mass[static_cast<size_t>(a)] == 0) return mu;
  return move_unchecked(g, mu, a);
}

VertexMeasure purge_interior(const Graph& g, const DistanceMatrix& dist,
                             const BoundarySet& boundary, const Kernel& kernel,
                             VertexMeasure mu, double eps) {
  if (mu.order() != g.order()) fail(errc::length_mismatch, "measure size mismatch");
  check_kernel_domain(kernel, dist);
  mu.validate();
  if (!kernel.admissible()) {
    fail(errc::kernel_not_admissible, "kernel must be nondecreasing and convex");
  }
  for (long long iter = 0; iter < kPurgeIterationCap; ++iter) {
    double interior_mass = 0;
    int heaviest = -1;
    double heaviest_mass = 0;
    for (int v = 0; v < g.order(); ++v) {
      if (boundary.contains(v)) continue;
      const double m = mu.mass[static_cast<size_t>(v)];
      interior_mass += m;
      if (m > heaviest_mass) {
        heaviest_mass = m;
        heaviest = v;
      }
    }
    if (interior_mass <= eps || heaviest < 0) {
      // Moves conserve mass up to rounding; pin the total back to 1.
      double total = 0;
      for (double m : mu.mass) total += m;
      if (total > 0 && total != 1.0) {
        for (double& m : mu.mass) m /= total;
      }
      return mu;
    }
    mu = move_unchecked(g, mu, heaviest);
  }
  fail(errc::non_termination, "interior purge exceeded " + std::to_string(kPurgeIterationCap) +
                                  " moves");
}

namespace {

// Multiplicative ascent on mu^T F mu over the simplex. F must be entrywise
// nonnegative (shift beforehand); zero entries of mu stay zero.
void replicator_ascend(const std::vector<double>& f, std::vector<double>& mass, int max_iters) {
  const int n = static_cast<int>(mass.size());
  std::vector<double> fm(static_cast<size_t>(n));
  double last = -std::numeric_limits<double>::infinity();
  int stale = 0;
  for (int iter = 0; iter < max_iters; ++iter) {
    double s = 0;
    for (int v = 0; v < n; ++v) {
      double row = 0;
      for (int w = 0; w < n; ++w) row += f[static_cast<size_t>(v) * n + w] * mass[static_cast<size_t>(w)];
      fm[static_cast<size_t>(v)] = row;
      s += row * mass[static_cast<size_t>(v)];
    }
    if (!(s > 1e-300)) {
      // Degenerate point (all energy zero); nudge toward uniform and retry.
      for (double& m : mass) m = 0.9 * m + 0.1 / n;
      continue;
    }
    if (s - last <= 1e-15 * std::max(1.0, std::abs(s))) {
      if (++stale > 25) break;
    } else {
      stale = 0;
    }
    last = s;
    double total = 0;
    for (int v = 0; v < n; ++v) {
      mass[static_cast<size_t>(v)] *= fm[static_cast<size_t>(v)] / s;
      total += mass[static_cast<size_t>(v)];
    }
    for (double& m : mass) m /= total;
  }
}

std::vector<double> shifted_nonnegative(std::vector<double> f) {
  double lo = 0;
  for (double v : f) lo = std::min(lo, v);
  if (lo < 0) {
    for (double& v : f) v -= lo;
  }
  return f;
}

}  // namespace

MaximizeResult maximize_energy(const Graph& g, const DistanceMatrix& dist,
                               const BoundarySet& boundary, const Kernel& kernel,
                               const MaximizeOptions& options) {
  check_kernel_domain(kernel, dist);
  if (!kernel.admissible()) {
    fail(errc::kernel_not_admissible, "kernel must be nondecreasing and convex");
  }
  const int n = g.order();
  if (n == 1) {
    MaximizeResult r;
    r.mu = VertexMeasure::point_mass(1, 0);
    r.energy = kernel(0);
    r.interior_mass = boundary.contains(0) ? 0.0 : 1.0;
    return r;
  }

  const std::vector<double> f = kernel_matrix(dist, kernel);
  const std::vector<double> f_shifted = shifted_nonnegative(f);

  MaximizeResult best;
  bool have_best = false;
  for (int restart = 0; restart < std::max(1, options.restarts); ++restart) {
    VertexMeasure mu;
    if (restart == 0) {
      mu = VertexMeasure::uniform_on(n, boundary.members);
    } else if (restart == 1) {
      mu = VertexMeasure::uniform(n);
    } else {
      CounterRng rng(CounterRng::substream(options.seed, static_cast<std::uint64_t>(restart)));
      mu.mass.resize(static_cast<size_t>(n));
      double total = 0;
      for (double& m : mu.mass) {
        m = -std::log(1.0 - rng.next_double());
        total += m;
      }
      for (double& m : mu.mass) m /= total;
    }

    for (int phase = 0; phase < 3; ++phase) {
      replicator_ascend(f_shifted, mu.mass, options.polish_iters);
      mu = purge_interior(g, dist, boundary, kernel, std::move(mu), options.purge_eps);
    }

    const double e = quadratic_energy(f, mu.mass);
    if (!have_best || e > best.energy) {
      best.mu = std::move(mu);
      best.energy = e;
      have_best = true;
    }
  }

  best.interior_mass = 0;
  for (int v = 0; v < n; ++v) {
    if (!boundary.contains(v)) best.interior_mass += best.mu.mass[static_cast<size_t>(v)];
  }
  return best;
}

BruteForceResult brute_force_max(const Graph& g, const DistanceMatrix& dist,
                                 const Kernel& kernel, int grid_steps) {
  check_kernel_domain(kernel, dist);
  if (grid_steps < 1) fail(errc::invalid_argument, "grid_steps must be positive");
  const int n = g.order();
  if (n == 1) {
    BruteForceResult r;
    r.mu = VertexMeasure::point_mass(1, 0);
    r.energy = kernel(0);
    return r;
  }

  const std::vector<double> f = kernel_matrix(dist, kernel);
  const std::vector<double> f_shifted = shifted_nonnegative(f);

  // Best grid points, kept as polish seeds. Generous: the oracle must not
  // get trapped in a lesser basin than the solver it checks.
  constexpr int kSeeds = 64;
  std::vector<std::pair<double, std::vector<double>>> seeds;

  std::vector<double> mass(static_cast<size_t>(n), 0.0);
  std::vector<int> counts(static_cast<size_t>(n), 0);
  auto consider = [&](const std::vector<double>& candidate) {
    const double e = quadratic_energy(f, candidate);
    if (static_cast<int>(seeds.size()) < kSeeds) {
      seeds.emplace_back(e, candidate);
      std::sort(seeds.begin(), seeds.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
      return;
    }
    if (e > seeds.back().first) {
      seeds.back() = {e, candidate};
      std::sort(seeds.begin(), seeds.end(),
                [](const auto& a, const auto& b) { return a.first > b.first; });
    }
  };

  auto enumerate = [&](auto&& self, int index, int remaining) -> void {
    if (index == n - 1) {
      counts[static_cast<size_t>(index)] = remaining;
      for (int v = 0; v < n; ++v) {
        mass[static_cast<size_t>(v)] = static_cast<double>(counts[static_cast<size_t>(v)]) / grid_steps;
      }
      consider(mass);
      return;
    }
    for (int take = remaining; take >= 0; --take) {
      counts[static_cast<size_t>(index)] = take;
      self(self, index + 1, remaining - take);
    }
  };
  enumerate(enumerate, 0, grid_steps);

  // Point masses, vertex pairs and the uniform measure: cheap additional
  // seeds covering the typical support shapes of extremizers.
  for (int v = 0; v < n; ++v) consider(VertexMeasure::point_mass(n, v).mass);
  for (int v = 0; v < n; ++v) {
    for (int w = v + 1; w < n; ++w) {
      std::vector<double> pair_mass(static_cast<size_t>(n), 0.0);
      pair_mass[static_cast<size_t>(v)] = 0.5;
      pair_mass[static_cast<size_t>(w)] = 0.5;
      consider(pair_mass);
    }
  }
  consider(VertexMeasure::uniform(n).mass);

  BruteForceResult best;
  best.energy = -std::numeric_limits<double>::infinity();
  for (auto& [raw_energy, seed_mass] : seeds) {
    (void)raw_energy;
    std::vector<double> polished = seed_mass;
    replicator_ascend(f_shifted, polished, 20000);
    const double e = quadratic_energy(f, polished);
    if (e > best.energy) {
      best.energy = e;
      best.mu.mass = polished;
    }
    if (raw_energy > best.energy) {
      best.energy = raw_energy;
      best.mu.mass = seed_mass;
    }
  }
  return best;
}

}  // namespace graphpt
