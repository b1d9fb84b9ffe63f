#pragma once

#include <optional>

#include "thq/support_pattern.hpp"
#include "thq/weight_data.hpp"

namespace thq {

// Stabilizer of any point with a given support pattern, as an abstract group:
// a torus factor and a finite abelian part in invariant-factor form.
struct StabilizerStructure {
  int torus_rank = 0;
  std::vector<Int> torsion;   // invariant factors > 1, divisibility order
  std::optional<Int> order;   // total order when the group is finite

  bool finite() const { return torus_rank == 0; }
  bool trivial() const { return torus_rank == 0 && torsion.empty(); }
};

StabilizerStructure stabilizer(const WeightData& wd, const SupportPattern& pattern);

// Whether the torus orbit of a point with this support contains the origin in
// its closure; the witness is a one-parameter subgroup driving it there.
struct OrbitClosureResult {
  bool contains_origin = false;
  std::optional<IntVec> witness;
};

// With assert_on_fiber, the pattern must be realizable on the zero fiber of
// the moment map, otherwise InconsistentPatternError is thrown.
OrbitClosureResult origin_in_orbit_closure(const WeightData& wd, const SupportPattern& pattern,
                                           bool assert_on_fiber = false);

enum class PointClass {
  FreeSmooth,               // trivial stabilizer, smooth point of the fiber
  FiniteStabilizerInFiber,  // nontrivial finite stabilizer
  PositiveDimStabilizer,    // stabilizer contains a torus
};

// Throws UnrealizablePatternError when no point on the zero fiber has this
// exact support.
PointClass classify(const WeightData& wd, const SupportPattern& pattern);

}  // namespace thq
