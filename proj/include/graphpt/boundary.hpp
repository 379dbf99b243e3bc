#pragma once

#include <vector>

#include "graphpt/distance.hpp"
#include "graphpt/graph.hpp"
#include "graphpt/rational.hpp"

namespace graphpt {

// The boundary of a graph: vertices v for which some witness w makes the
// average neighbor of v strictly closer to w than v itself. All membership
// tests are exact integer comparisons; no floating point enters this module.
struct BoundarySet {
  std::vector<int> members;  // ascending
  std::vector<int> witness;  // size n; witness[v] >= 0 iff v is a member, else -1

  bool contains(int v) const { return witness[static_cast<size_t>(v)] >= 0; }
  int size() const { return static_cast<int>(members.size()); }
};

// Vertices grouped by distance from a fixed root: levels[i] holds the
// vertices at distance exactly i.
struct LevelPartition {
  int root = 0;
  std::vector<std::vector<int>> levels;
};

// deg(v) * d(v,w) > sum of d(x,w) over neighbors x of v, evaluated exactly.
bool is_witnessed(const Graph& g, const DistanceMatrix& dist, int v, int w);

// Members with the first witness (ascending vertex order) recorded per member.
BoundarySet boundary_set(const Graph& g, const DistanceMatrix& dist);

// Level-counting route: v is included iff for some root w it has strictly
// more neighbors one level closer to w than one level farther.
std::vector<int> boundary_via_levels(const Graph& g, const DistanceMatrix& dist);

// True iff for every w != v the neighbors of v farther from w are at least
// as numerous as those closer; the exact negation of boundary membership.
bool interior_check(const Graph& g, const DistanceMatrix& dist, int v);

LevelPartition make_level_partition(const Graph& g, const DistanceMatrix& dist, int root);

struct IsoperimetricReport {
  long long lhs = 0;  // |boundary|
  Rational rhs;       // n / (2 * maxdeg * diam)
  bool holds = false;
};

IsoperimetricReport isoperimetric_report(const Graph& g, const DistanceMatrix& dist,
                                         const BoundarySet& boundary);

}  // namespace graphpt
