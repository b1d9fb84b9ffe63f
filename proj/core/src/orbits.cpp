#include "thq/orbits.hpp"

#include "thq/errors.hpp"
#include "thq/feasibility.hpp"
#include "thq/moment.hpp"
#include "thq/snf.hpp"

namespace thq {

StabilizerStructure stabilizer(const WeightData& wd, const SupportPattern& pattern) {
  if (pattern.size() != wd.n) throw UsageError("pattern arity mismatch");
  // the stabilizer is the kernel of t -> (t^{a_j}) over the active columns;
  // Smith form of that column block reads off its invariant-factor shape
  SmithForm f = smith_normal_form(wd.a.select_columns(pattern.support()));
  StabilizerStructure st;
  st.torus_rank = wd.d - f.rank();
  for (const Int& s : f.invariant_factors())
    if (s > 1) st.torsion.push_back(s);
  if (st.torus_rank == 0) {
    Int ord = 1;
    for (const Int& s : st.torsion) ord *= s;
    st.order = ord;
  }
  return st;
}

OrbitClosureResult origin_in_orbit_closure(const WeightData& wd, const SupportPattern& pattern,
                                           bool assert_on_fiber) {
  if (pattern.size() != wd.n) throw UsageError("pattern arity mismatch");
  if (assert_on_fiber && !sample_point(wd, pattern))
    throw InconsistentPatternError("pattern does not occur on the zero fiber");

  // a one-parameter subgroup lambda sends the point to 0 exactly when every
  // active z-weight is strictly positive and every active w-weight strictly
  // negative on lambda
  SignSystem sys;
  sys.dim = wd.d;
  for (int j = 0; j < wd.n; ++j) {
    if (pattern.z_active(j)) sys.positive.push_back(wd.a.column(j));
    if (pattern.w_active(j)) sys.negative.push_back(wd.a.column(j));
  }
  OrbitClosureResult out;
  out.witness = strict_feasible(sys);
  out.contains_origin = out.witness.has_value();
  return out;
}

PointClass classify(const WeightData& wd, const SupportPattern& pattern) {
  if (!sample_point(wd, pattern))
    throw UnrealizablePatternError("no point on the zero fiber has this support");
  StabilizerStructure st = stabilizer(wd, pattern);
  if (!st.finite()) return PointClass::PositiveDimStabilizer;
  return st.trivial() ? PointClass::FreeSmooth : PointClass::FiniteStabilizerInFiber;
}

}  // namespace thq
