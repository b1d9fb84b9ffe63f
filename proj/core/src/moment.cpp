#include "thq/moment.hpp"

#include "thq/errors.hpp"
#include "thq/snf.hpp"

namespace thq {

SupportPattern realized_pattern(const PointCoords& p) {
  if (p.z.size() != p.w.size()) throw UsageError("point coordinate length mismatch");
  SupportPattern out = SupportPattern::none(static_cast<int>(p.z.size()));
  for (int i = 0; i < out.size(); ++i) {
    const bool z = p.z[i] != 0, w = p.w[i] != 0;
    out.state[i] = z ? (w ? CoordState::Both : CoordState::ZOnly)
                     : (w ? CoordState::WOnly : CoordState::None);
  }
  return out;
}

RatVec MomentMap::evaluate(const PointCoords& p) const {
  if (static_cast<int>(p.z.size()) != coords() || static_cast<int>(p.w.size()) != coords())
    throw UsageError("point arity mismatch");
  RatVec f(components(), Rat(0));
  for (int i = 0; i < components(); ++i)
    for (int j = 0; j < coords(); ++j)
      if (p.z[j] != 0 && p.w[j] != 0) f[i] += Rat(a_(i, j)) * p.z[j] * p.w[j];
  return f;
}

bool MomentMap::vanishes_at(const PointCoords& p) const {
  for (const Rat& v : evaluate(p))
    if (v != 0) return false;
  return true;
}

int MomentMap::jacobian_rank_at(const PointCoords& p) const {
  if (static_cast<int>(p.z.size()) != coords() || static_cast<int>(p.w.size()) != coords())
    throw UsageError("point arity mismatch");
  // column j of the Jacobian is w_j * a_j (then z_j * a_j); scaling a column
  // by its positive denominator keeps the rank, so integer numerators suffice
  IntMatrix jac(components(), 2 * coords());
  for (int j = 0; j < coords(); ++j)
    for (int i = 0; i < components(); ++i) {
      jac(i, j) = a_(i, j) * Int(p.w[j].get_num());
      jac(i, coords() + j) = a_(i, j) * Int(p.z[j].get_num());
    }
  return rank(jac);
}

SingularLocus singular_strata(const WeightData& wd) {
  SingularLocus out;
  out.dimension = wd.d - 1;
  for (int k = 0; k <= wd.d - 1; ++k) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = i;
    for (;;) {
      for (unsigned mask = 0; mask < (1u << k); ++mask) {
        SupportPattern p = SupportPattern::none(wd.n);
        for (int i = 0; i < k; ++i)
          p.state[s[i]] = (mask >> i) & 1 ? CoordState::WOnly : CoordState::ZOnly;
        out.strata.push_back({std::move(p), k});
      }
      int i = k - 1;
      while (i >= 0 && s[i] == wd.n - k + i) --i;
      if (i < 0) break;
      ++s[i];
      for (int j = i + 1; j < k; ++j) s[j] = s[j - 1] + 1;
    }
  }
  return out;
}

std::optional<PointCoords> sample_point(const WeightData& wd, const SupportPattern& pattern) {
  if (pattern.size() != wd.n) throw UsageError("pattern arity mismatch");
  PointCoords p{RatVec(wd.n, Rat(0)), RatVec(wd.n, Rat(0))};
  for (int i = 0; i < wd.n; ++i) {
    if (pattern.state[i] == CoordState::ZOnly) p.z[i] = 1;
    if (pattern.state[i] == CoordState::WOnly) p.w[i] = 1;
  }

  const std::vector<int> both = pattern.both_indices();
  if (!both.empty()) {
    // need x in ker(a restricted to these columns) with every entry nonzero;
    // combine a kernel basis with geometrically growing multipliers so no
    // coordinate with any nonzero basis entry can cancel
    IntMatrix k = kernel_basis(wd.a.select_columns(both));
    if (k.cols() == 0) return std::nullopt;
    Int m = 0;
    for (int i = 0; i < k.rows(); ++i) {
      Int row_norm = 0;
      for (int t = 0; t < k.cols(); ++t) row_norm += abs(k(i, t));
      if (row_norm == 0) return std::nullopt;  // kernel misses this coordinate
      m = std::max(m, row_norm);
    }
    m += 1;
    for (int i = 0; i < k.rows(); ++i) {
      Int x = 0, pw = 1;
      for (int t = 0; t < k.cols(); ++t) {
        x += k(i, t) * pw;
        pw *= m;
      }
      p.z[both[i]] = 1;
      p.w[both[i]] = Rat(x);
    }
  }

  MomentMap mu(wd);
  if (!mu.vanishes_at(p) || !(realized_pattern(p) == pattern))
    throw Error("sample point construction broke its own invariant");
  return p;
}

}  // namespace thq
