#include "thq/chambers.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "thq/errors.hpp"
#include "thq/feasibility.hpp"
#include "thq/snf.hpp"

namespace thq {

bool is_semistable(const WeightData& wd, const Character& alpha, const SupportPattern& pattern) {
  if (static_cast<int>(alpha.size()) != wd.d) throw UsageError("character arity mismatch");
  if (pattern.size() != wd.n) throw UsageError("pattern arity mismatch");
  std::vector<IntVec> gens;
  for (int j = 0; j < wd.n; ++j) {
    if (pattern.z_active(j)) gens.push_back(wd.a.column(j));
    if (pattern.w_active(j)) {
      IntVec neg = wd.a.column(j);
      for (Int& x : neg) x = -x;
      gens.push_back(std::move(neg));
    }
  }
  return in_rational_cone(alpha, gens);
}

UnstableLocus unstable_locus(const WeightData& wd, const Character& alpha) {
  UnstableLocus out;
  out.alpha = alpha;
  std::vector<SupportPattern> unstable;
  for (const SupportPattern& p : SupportPattern::enumerate_all(wd.n))
    if (!is_semistable(wd, alpha, p)) unstable.push_back(p);
  // keep the maximal ones; instability is inherited downward
  for (const SupportPattern& p : unstable) {
    bool maximal = true;
    for (const SupportPattern& q : unstable)
      if (!(q == p) && p.subset_of(q)) {
        maximal = false;
        break;
      }
    if (maximal) out.maximal.push_back(p);
  }
  std::sort(out.maximal.begin(), out.maximal.end());
  return out;
}

namespace {

IntVec sign_normalized(IntVec v) {
  for (const Int& x : v) {
    if (x > 0) break;
    if (x < 0) {
      for (Int& y : v) y = -y;
      break;
    }
  }
  return v;
}

// hyperplane spanned by a set of d-1 independent columns, as its normal
IntVec hyperplane_normal(const IntMatrix& a, const std::vector<int>& cols) {
  IntMatrix k = kernel_basis(a.select_columns(cols).transposed());
  if (k.cols() != 1) throw Error("wall span is degenerate");
  return sign_normalized(primitive(k.column(0)));
}

int upper_half(const IntVec& r) {
  return (r[1] > 0 || (r[1] == 0 && r[0] > 0)) ? 0 : 1;
}

Int cross(const IntVec& a, const IntVec& b) { return a[0] * b[1] - a[1] * b[0]; }

// strict angular order on nonzero plane vectors, counterclockwise from (1,0)
bool angle_less(const IntVec& a, const IntVec& b) {
  const int ha = upper_half(a), hb = upper_half(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

}  // namespace

ChamberDecomposition chambers(const WeightData& wd) {
  ChamberDecomposition out;
  const int d = wd.d;

  // the wall arrangement: spans of (d-1)-subsets of columns, deduplicated
  std::map<IntVec, std::vector<int>> by_normal;
  std::vector<int> s(d - 1);
  for (int i = 0; i < d - 1; ++i) s[i] = i;
  for (;;) {
    IntVec normal = hyperplane_normal(wd.a, s);
    if (!by_normal.contains(normal)) {
      std::vector<int> on_wall;
      for (int j = 0; j < wd.n; ++j)
        if (dot(normal, wd.a.column(j)) == 0) on_wall.push_back(j);
      by_normal.emplace(std::move(normal), std::move(on_wall));
    }
    int i = d - 2;
    while (i >= 0 && s[i] == wd.n - (d - 1) + i) --i;
    if (i < 0) break;
    ++s[i];
    for (int j = i + 1; j < d - 1; ++j) s[j] = s[j - 1] + 1;
  }
  for (auto& [normal, cols] : by_normal) out.walls.push_back({normal, cols});

  if (d == 1) {
    // one wall at the origin, a chamber on each side
    out.chambers.push_back({IntVec{Int(1)}, {0}});
    out.chambers.push_back({IntVec{Int(-1)}, {0}});
    out.enumerated = true;
    return out;
  }

  if (d == 2) {
    // sectors cut out by the column lines, walked counterclockwise
    struct Ray {
      IntVec dir;
      int wall;
    };
    std::vector<Ray> rays;
    for (std::size_t wi = 0; wi < out.walls.size(); ++wi) {
      IntVec dir{-out.walls[wi].normal[1], out.walls[wi].normal[0]};
      IntVec neg{-dir[0], -dir[1]};
      rays.push_back({std::move(dir), static_cast<int>(wi)});
      rays.push_back({std::move(neg), static_cast<int>(wi)});
    }
    std::sort(rays.begin(), rays.end(),
              [](const Ray& a, const Ray& b) { return angle_less(a.dir, b.dir); });
    const int m = static_cast<int>(rays.size());
    for (int k = 0; k < m; ++k) {
      const Ray& lo = rays[k];
      const Ray& hi = rays[(k + 1) % m];
      IntVec sample{lo.dir[0] + hi.dir[0], lo.dir[1] + hi.dir[1]};
      out.chambers.push_back({primitive(std::move(sample)), {lo.wall, hi.wall}});
    }
    out.enumerated = true;
    return out;
  }

  return out;  // d >= 3: arrangement only
}

std::string WeightedProjectiveSpace::to_string() const {
  std::ostringstream os;
  os << "P(";
  for (std::size_t i = 0; i < weights.size(); ++i) os << (i ? ", " : "") << weights[i];
  os << ")";
  return os.str();
}

WeightedProjectiveSpace exceptional_fiber(const WeightData& wd, Side side) {
  (void)side;  // the two small contractions share one central fiber
  if (wd.d != 1)
    throw UsageError("exceptional fiber is only defined for a single torus factor");
  return {wd.tuple()};
}

bool distinguish(const IntVec& a, const IntVec& b) {
  const WeightData wa = build(a);
  const WeightData wb = build(b);
  return !(exceptional_fiber(wa, Side::Plus) == exceptional_fiber(wb, Side::Plus));
}

}  // namespace thq
