#pragma once

#include <vector>

#include "thq/support_pattern.hpp"
#include "thq/weight_data.hpp"

namespace thq {

// A linearization character of the torus, one integer per torus factor.
using Character = IntVec;

// King-style test: a point with this support is alpha-semistable exactly when
// alpha lies in the cone of active z-columns and negated active w-columns.
bool is_semistable(const WeightData& wd, const Character& alpha, const SupportPattern& pattern);

// Support patterns of alpha-unstable points, reported by their maximal
// elements (instability is inherited by sub-patterns).
struct UnstableLocus {
  Character alpha;
  std::vector<SupportPattern> maximal;  // canonical order
  bool empty() const { return maximal.empty(); }
};

UnstableLocus unstable_locus(const WeightData& wd, const Character& alpha);

// A codimension-one cone of the chamber decomposition of character space.
struct Wall {
  IntVec normal;             // primitive, first nonzero entry positive
  std::vector<int> columns;  // 0-based weight columns lying on the wall
};

struct Chamber {
  Character sample;         // primitive interior point
  std::vector<int> walls;   // indices into ChamberDecomposition::walls
};

// For one and two torus factors the chambers are enumerated outright; for
// three or more only the wall arrangement is reported and `enumerated` stays
// false rather than pretending to a count.
struct ChamberDecomposition {
  std::vector<Wall> walls;
  std::vector<Chamber> chambers;
  bool enumerated = false;
};

ChamberDecomposition chambers(const WeightData& wd);

// The fiber over the cone point common to the two sides of the wall-crossing
// diagram; only defined for a single torus factor.
struct WeightedProjectiveSpace {
  IntVec weights;  // ascending
  bool operator==(const WeightedProjectiveSpace& o) const { return weights == o.weights; }
  std::string to_string() const;  // "P(1, 2, 3)"
};

enum class Side { Plus, Minus };

WeightedProjectiveSpace exceptional_fiber(const WeightData& wd, Side side);

// Do two weight tuples produce non-isomorphic exceptional fibers? Both inputs
// are validated and canonicalized first.
bool distinguish(const IntVec& a, const IntVec& b);

}  // namespace thq
