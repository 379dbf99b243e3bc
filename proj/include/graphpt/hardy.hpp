#pragma once

#include <span>
#include <vector>

#include "graphpt/boundary.hpp"
#include "graphpt/graph.hpp"
#include "graphpt/walks.hpp"

namespace graphpt {

// Weight -deg(v)/phi(v) on the interior (supersolution sign convention),
// NaN on the boundary where phi vanishes.
struct HardyWeight {
  std::vector<double> w;
  std::vector<double> phi;
};

HardyWeight hardy_weight(const Graph& g, const BoundarySet& boundary,
                         const HittingPotential& phi);

// Q(f) = sum over edges of (f(u)-f(v))^2 + sum over vertices of w(v) f(v)^2.
// NaN weights are permitted wherever f vanishes (the term contributes 0).
double quadratic_form(const Graph& g, std::span<const double> w, std::span<const double> f);

// True iff phi > 0 on V \ X and (D-A)phi + w phi >= -1e-12 there.
bool aap_supersolution_check(const Graph& g, std::span<const double> w,
                             std::span<const double> phi, std::span<const int> X);

struct HardyCheck {
  double lhs = 0;  // Dirichlet energy of f
  double rhs = 0;  // sum over interior of deg(v) f(v)^2 / phi(v)
  bool holds = false;
};

HardyCheck hardy_check(const Graph& g, const BoundarySet& boundary,
                       const HittingPotential& phi, std::span<const double> f);

// Smallest eigenvalue of the interior matrix L2 - diag(deg/phi); the Hardy
// inequality holds for every admissible f iff this is >= 0 (up to solver
// tolerance).
double hardy_certificate(const Graph& g, const BoundarySet& boundary,
                         const HittingPotential& phi);

}  // namespace graphpt
