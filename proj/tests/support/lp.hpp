#pragma once

#include <span>
#include <vector>

#include "graphpt/graph.hpp"

namespace graphpt::testsupport {

// Maximizes c.x subject to A x <= b with x free. Requires b >= 0 (so x = 0
// is feasible) and a bounded optimum; dense tableau simplex with Bland's
// rule. Test oracle only.
double lp_maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                   const std::vector<double>& c);

// Optimum of "maximize max_V f subject to f <= 0 on X, -1 <= (Lf)(v) <= 1
// on V \ X": the brute-force value of the best maximum-principle constant.
double abp_constant_lp(const Graph& g, std::span<const int> X);

}  // namespace graphpt::testsupport
