#include <cmath>
#include <limits>

#include "doctest.h"
#include "graphpt/families.hpp"
#include "graphpt/hardy.hpp"
#include "graphpt/spectral.hpp"
#include "support/corpus.hpp"

using namespace graphpt;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

}  // namespace

TEST_CASE("quadratic form on the stated examples") {
  const Graph p3 = path_graph(3);
  const std::vector<double> zero_w(3, 0.0);
  CHECK(quadratic_form(p3, zero_w, std::vector<double>{0, 1, 0}) == doctest::Approx(2.0));
  CHECK(quadratic_form(p3, zero_w, std::vector<double>{0, 0, 0}) == 0.0);

  // phi(1) = 1 with both neighbors absorbing, so W(1) = -deg/phi = -2
  const std::vector<double> w{kNaN, -2.0, kNaN};
  CHECK(quadratic_form(p3, w, std::vector<double>{0, 1, 0}) == doctest::Approx(0.0));
  CHECK_THROWS_AS(quadratic_form(p3, w, std::vector<double>{1, 0, 0}), Error);
}

TEST_CASE("supersolution check") {
  const Graph p4 = path_graph(4);
  const std::vector<double> ones(4, 1.0);
  const std::vector<double> zero_w(4, 0.0);
  CHECK(aap_supersolution_check(p4, zero_w, ones, std::vector<int>{}));

  const DistanceMatrix dist = all_pairs_distances(p4);
  const BoundarySet boundary = boundary_set(p4, dist);
  const HittingPotential phi = hitting_potential(p4, boundary.members);
  const HardyWeight weight = hardy_weight(p4, boundary, phi);
  CHECK(aap_supersolution_check(p4, weight.w, phi.phi, boundary.members));

  std::vector<double> with_zero = phi.phi;
  with_zero[1] = 0.0;
  CHECK(!aap_supersolution_check(p4, weight.w, with_zero, boundary.members));
}

TEST_CASE("supersolution equality for the hitting potential") {
  // (D - A) phi = deg on the interior makes the AAP inequality an identity
  for (const auto& [name, g] : testsupport::standard_corpus()) {
    INFO(name);
    const DistanceMatrix dist = all_pairs_distances(g);
    const BoundarySet boundary = boundary_set(g, dist);
    if (boundary.size() == g.order()) continue;
    const HittingPotential phi = hitting_potential(g, boundary.members);
    const std::vector<double> lap = apply_laplacian(g, phi.phi);
    for (int v = 0; v < g.order(); ++v) {
      if (boundary.contains(v)) continue;
      CHECK(lap[static_cast<size_t>(v)] == doctest::Approx(g.degree(v)).epsilon(1e-10));
    }
    const HardyWeight weight = hardy_weight(g, boundary, phi);
    CHECK(aap_supersolution_check(g, weight.w, phi.phi, boundary.members));
  }
}

TEST_CASE("lemma-style positivity for random supersolutions") {
  CounterRng rng(RngSeed{1234, 0});
  int cases = 0;
  int attempts = 0;
  while (cases < 200 && attempts < 2000) {
    ++attempts;
    const int n = 4 + static_cast<int>(rng.next_below(10));
    const Graph g = random_connected_graph(n, 0.8, RngSeed{50, static_cast<std::uint64_t>(attempts)});
    std::vector<int> x;
    for (int v = 0; v < n; ++v) {
      if (rng.next_double() < 0.3) x.push_back(v);
    }
    if (x.empty() || static_cast<int>(x.size()) == n) continue;
    ++cases;

    std::vector<double> phi(static_cast<size_t>(n), 1.0);
    for (double& p : phi) p = 0.1 + 1.9 * rng.next_double();
    // W chosen so the supersolution inequality holds with random slack
    std::vector<double> w(static_cast<size_t>(n), 0.0);
    const std::vector<double> lap = apply_laplacian(g, phi);
    for (int v = 0; v < n; ++v) {
      w[static_cast<size_t>(v)] =
          -lap[static_cast<size_t>(v)] / phi[static_cast<size_t>(v)] + rng.next_double();
    }
    REQUIRE(aap_supersolution_check(g, w, phi, x));

    BoundarySet fake;
    fake.members = x;
    fake.witness.assign(static_cast<size_t>(n), -1);
    for (int v : x) fake.witness[static_cast<size_t>(v)] = 0;
    for (int trial = 0; trial < 50; ++trial) {
      const std::vector<double> f = testsupport::random_interior_function(g, fake, rng);
      CHECK(quadratic_form(g, w, f) >= -1e-9);
    }
  }
  CHECK(cases == 200);
}

TEST_CASE("hardy check on the stated examples") {
  {
    const Graph p3 = path_graph(3);
    const DistanceMatrix dist = all_pairs_distances(p3);
    const BoundarySet boundary = boundary_set(p3, dist);
    const HittingPotential phi = hitting_potential(p3, boundary.members);
    const auto check = hardy_check(p3, boundary, phi, std::vector<double>{0, 1, 0});
    CHECK(check.lhs == doctest::Approx(2.0));
    CHECK(check.rhs == doctest::Approx(2.0));
    CHECK(check.holds);
  }
  {
    const Graph p5 = path_graph(5);
    const DistanceMatrix dist = all_pairs_distances(p5);
    const BoundarySet boundary = boundary_set(p5, dist);
    const HittingPotential phi = hitting_potential(p5, boundary.members);
    const auto check = hardy_check(p5, boundary, phi, std::vector<double>{0, 1, 1, 1, 0});
    CHECK(check.lhs == doctest::Approx(2.0));
    CHECK(check.rhs == doctest::Approx(11.0 / 6).epsilon(1e-10));
    CHECK(check.holds);

    const auto zero = hardy_check(p5, boundary, phi, std::vector<double>{0, 0, 0, 0, 0});
    CHECK(zero.lhs == 0.0);
    CHECK(zero.rhs == 0.0);
    CHECK(zero.holds);

    CHECK_THROWS_AS(hardy_check(p5, boundary, phi, std::vector<double>{1, 0, 0, 0, 0}), Error);
  }
}

TEST_CASE("hardy certificate on the stated examples") {
  {
    const Graph p3 = path_graph(3);
    const DistanceMatrix dist = all_pairs_distances(p3);
    const BoundarySet boundary = boundary_set(p3, dist);
    const HittingPotential phi = hitting_potential(p3, boundary.members);
    CHECK(hardy_certificate(p3, boundary, phi) == doctest::Approx(0.0).epsilon(1e-12));
  }
  {
    const Graph p5 = path_graph(5);
    const DistanceMatrix dist = all_pairs_distances(p5);
    const BoundarySet boundary = boundary_set(p5, dist);
    const HittingPotential phi = hitting_potential(p5, boundary.members);
    CHECK(hardy_certificate(p5, boundary, phi) >= -1e-8);
  }
  {
    const Graph k2 = path_graph(2);
    const DistanceMatrix dist = all_pairs_distances(k2);
    const BoundarySet boundary = boundary_set(k2, dist);
    const HittingPotential phi = hitting_potential(k2, boundary.members);
    CHECK_THROWS_AS(hardy_certificate(k2, boundary, phi), Error);
  }
}

TEST_CASE("hardy inequality and certificate across the corpus") {
  CounterRng rng(RngSeed{31, 0});
  for (const auto& [name, g] : testsupport::standard_corpus()) {
    INFO(name);
    const DistanceMatrix dist = all_pairs_distances(g);
    const BoundarySet boundary = boundary_set(g, dist);
    if (boundary.size() == g.order()) continue;
    const HittingPotential phi = hitting_potential(g, boundary.members);
    CHECK(hardy_certificate(g, boundary, phi) >= -1e-8);
    for (int trial = 0; trial < 50; ++trial) {
      const std::vector<double> f = testsupport::random_interior_function(g, boundary, rng);
      CHECK(hardy_check(g, boundary, phi, f).holds);
    }
  }
}

TEST_CASE("hardy implies a faber-krahn type bound") {
  CounterRng rng(RngSeed{32, 0});
  for (const auto& [name, g] : testsupport::standard_corpus()) {
    if (g.order() > 30) continue;
    INFO(name);
    const DistanceMatrix dist = all_pairs_distances(g);
    const BoundarySet boundary = boundary_set(g, dist);
    if (boundary.size() == g.order()) continue;
    const HittingPotential phi = hitting_potential(g, boundary.members);
    const auto [mindeg, maxdeg] = g.degree_extremes();
    (void)maxdeg;
    const double floor = mindeg / phi.max();
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<double> f = testsupport::random_interior_function(g, boundary, rng);
      double norm = 0;
      for (double x : f) norm += x * x;
      if (norm == 0) continue;
      const auto check = hardy_check(g, boundary, phi, f);
      CHECK(rayleigh_quotient(g, f) >= check.rhs / norm - 1e-9);
      CHECK(check.rhs / norm >= floor - 1e-9);
    }
  }
}
