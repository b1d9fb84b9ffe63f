#pragma once

#include <optional>
#include <vector>

#include "thq/support_pattern.hpp"
#include "thq/weight_data.hpp"

namespace thq {

// A point of C^n x C^n with exact coordinates. Only rational points are ever
// needed: every question answered here is about zero/nonzero shapes.
struct PointCoords {
  RatVec z, w;
};

SupportPattern realized_pattern(const PointCoords& p);

// The d quadratic equations cutting the zero fiber, f_i = sum_j a_ij z_j w_j.
class MomentMap {
 public:
  explicit MomentMap(const WeightData& wd) : a_(wd.a) {}

  int components() const { return a_.rows(); }
  int coords() const { return a_.cols(); }
  const IntMatrix& weights() const { return a_; }

  RatVec evaluate(const PointCoords& p) const;
  bool vanishes_at(const PointCoords& p) const;

  // rank of the d x 2n Jacobian [a.diag(w) | a.diag(z)] at p, exactly
  int jacobian_rank_at(const PointCoords& p) const;

 private:
  IntMatrix a_;
};

struct Stratum {
  SupportPattern pattern;
  int dimension;  // number of active coordinates
};

// The singular points of the zero fiber, grouped by support pattern: at most
// d-1 coordinates active, each in exactly one of the two slots.
struct SingularLocus {
  std::vector<Stratum> strata;  // by (size, support, z/w choice), ascending
  int dimension;                // d - 1
};

SingularLocus singular_strata(const WeightData& wd);

// A point on the zero fiber whose support is exactly `pattern`, or nullopt
// when no such point exists. Deterministic in the input.
std::optional<PointCoords> sample_point(const WeightData& wd, const SupportPattern& pattern);

}  // namespace thq
