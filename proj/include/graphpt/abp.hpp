#pragma once

#include <span>
#include <vector>

#include "graphpt/boundary.hpp"
#include "graphpt/distance.hpp"
#include "graphpt/graph.hpp"

namespace graphpt {

// Solution of L u = 1 on V \ X, u = 0 on X; positive on V \ X.
struct TorsionFunction {
  std::vector<double> u;
  std::vector<int> x;  // sorted

  double max() const;
};

TorsionFunction torsion_function(const Graph& g, std::span<const int> X);

// max u over the torsion function: the least constant C(X) for which
// max f <= max_X f + C(X) ||Lf||_inf(V\X) holds for every f.
double abp_sharp_constant(const Graph& g, std::span<const int> X);

struct AbpCheck {
  double lhs = 0;            // max over V of f
  double rhs = 0;            // boundary max + 2 (maxdeg/mindeg) diam^2 ||Lf||
  double one_sided_rhs = 0;  // same with ||max(Lf, 0)||
  bool holds = false;
};

AbpCheck abp_check(const Graph& g, const DistanceMatrix& dist, const BoundarySet& boundary,
                   std::span<const double> f);

}  // namespace graphpt
