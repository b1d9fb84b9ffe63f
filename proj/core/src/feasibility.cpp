#include "thq/feasibility.hpp"

#include <map>
#include <utility>

#include "thq/errors.hpp"

namespace thq {

namespace {

// Scale to a primitive integer row so duplicates collide; solutions unchanged.
void normalize(LinearConstraint& c) {
  Int l = 1;
  for (const Rat& q : c.coeffs) l = lcm(l, Int(q.get_den()));
  l = lcm(l, Int(c.constant.get_den()));
  Int g = 0;
  // Explicit return type: a deduced gmpxx expression template would dangle.
  auto scaled = [&](const Rat& q) -> Int { return Int(q.get_num()) * (l / Int(q.get_den())); };
  for (const Rat& q : c.coeffs) g = gcd(g, scaled(q));
  g = gcd(g, scaled(c.constant));
  if (g == 0) g = 1;
  for (Rat& q : c.coeffs) q = Rat(scaled(q) / g);
  c.constant = Rat(scaled(c.constant) / g);
}

bool ground_true(const LinearConstraint& c) {
  return c.strict ? c.constant > 0 : c.constant >= 0;
}

bool is_ground(const LinearConstraint& c) {
  for (const Rat& q : c.coeffs)
    if (q != 0) return false;
  return true;
}

// Dedup a system; identical rows keep the strict variant. Returns false on a
// ground contradiction.
bool compact(std::vector<LinearConstraint>& cs) {
  std::map<std::pair<std::vector<Int>, Int>, std::size_t> seen;
  std::vector<LinearConstraint> out;
  for (LinearConstraint& c : cs) {
    normalize(c);
    if (is_ground(c)) {
      if (!ground_true(c)) return false;
      continue;
    }
    std::vector<Int> key;
    key.reserve(c.coeffs.size());
    for (const Rat& q : c.coeffs) key.emplace_back(q.get_num());
    auto it = seen.find({key, Int(c.constant.get_num())});
    if (it == seen.end()) {
      seen.emplace(std::make_pair(std::move(key), Int(c.constant.get_num())), out.size());
      out.push_back(std::move(c));
    } else {
      out[it->second].strict = out[it->second].strict || c.strict;
    }
  }
  cs = std::move(out);
  return true;
}

}  // namespace

std::optional<RatVec> fourier_motzkin(const std::vector<LinearConstraint>& cs, int num_vars) {
  for (const LinearConstraint& c : cs)
    if (static_cast<int>(c.coeffs.size()) != num_vars)
      throw UsageError("constraint arity mismatch");

  // levels[j] constrains variables x_0..x_{j-1}
  std::vector<std::vector<LinearConstraint>> levels(num_vars + 1);
  levels[num_vars] = cs;
  if (!compact(levels[num_vars])) return std::nullopt;

  for (int k = num_vars - 1; k >= 0; --k) {
    std::vector<LinearConstraint> lower, upper, next;
    for (const LinearConstraint& c : levels[k + 1]) {
      const Rat& p = c.coeffs[k];
      LinearConstraint t = c;
      t.coeffs.resize(k);
      if (p > 0)
        lower.push_back(c);
      else if (p < 0)
        upper.push_back(c);
      else
        next.push_back(std::move(t));
    }
    for (const LinearConstraint& lo : lower)
      for (const LinearConstraint& hi : upper) {
        LinearConstraint c;
        c.strict = lo.strict || hi.strict;
        const Rat a = -hi.coeffs[k];  // > 0
        const Rat b = lo.coeffs[k];   // > 0
        c.coeffs.resize(k);
        for (int j = 0; j < k; ++j) c.coeffs[j] = a * lo.coeffs[j] + b * hi.coeffs[j];
        c.constant = a * lo.constant + b * hi.constant;
        next.push_back(std::move(c));
      }
    if (!compact(next)) return std::nullopt;
    levels[k] = std::move(next);
  }

  RatVec x(num_vars, Rat(0));
  for (int k = 0; k < num_vars; ++k) {
    bool has_lo = false, has_hi = false, lo_strict = false, hi_strict = false;
    Rat lo, hi;
    for (const LinearConstraint& c : levels[k + 1]) {
      const Rat& p = c.coeffs[k];
      if (p == 0) continue;
      Rat rest = c.constant;
      for (int j = 0; j < k; ++j) rest += c.coeffs[j] * x[j];
      Rat bound = -rest / p;
      if (p > 0) {  // x_k >= bound
        if (!has_lo || bound > lo) {
          lo = bound;
          lo_strict = c.strict;
        } else if (bound == lo) {
          lo_strict = lo_strict || c.strict;
        }
        has_lo = true;
      } else {  // x_k <= bound
        if (!has_hi || bound < hi) {
          hi = bound;
          hi_strict = c.strict;
        } else if (bound == hi) {
          hi_strict = hi_strict || c.strict;
        }
        has_hi = true;
      }
    }
    if (has_lo && has_hi) {
      if (lo == hi)
        x[k] = lo;  // projection already certified the point is admissible
      else
        x[k] = (lo + hi) / 2;
    } else if (has_lo) {
      x[k] = lo_strict ? lo + 1 : lo;
    } else if (has_hi) {
      x[k] = hi_strict ? hi - 1 : hi;
    }
  }

  // paranoia: the substitution order is easy to get wrong, so verify
  for (const LinearConstraint& c : cs) {
    Rat v = c.constant;
    for (int j = 0; j < num_vars; ++j) v += c.coeffs[j] * x[j];
    if (c.strict ? v <= 0 : v < 0) throw Error("back-substitution produced a bad witness");
  }
  return x;
}

bool satisfies(const SignSystem& sys, const IntVec& lambda) {
  for (const IntVec& v : sys.positive)
    if (dot(v, lambda) <= 0) return false;
  for (const IntVec& v : sys.negative)
    if (dot(v, lambda) >= 0) return false;
  return true;
}

namespace {

std::vector<LinearConstraint> to_constraints(const SignSystem& sys) {
  std::vector<LinearConstraint> cs;
  auto push = [&](const IntVec& v, bool flip) {
    if (static_cast<int>(v.size()) != sys.dim)
      throw UsageError("sign system vector arity mismatch");
    LinearConstraint c;
    c.coeffs.resize(sys.dim);
    for (int j = 0; j < sys.dim; ++j) c.coeffs[j] = Rat(flip ? -v[j] : v[j]);
    c.constant = 0;
    c.strict = true;
    cs.push_back(std::move(c));
  };
  for (const IntVec& v : sys.positive) push(v, false);
  for (const IntVec& v : sys.negative) push(v, true);
  return cs;
}

// Smallest max-norm, then lexicographically smallest integer witness. Only
// attempted when the search box is tiny; otherwise the FM witness stands.
std::optional<IntVec> polish(const SignSystem& sys, const IntVec& seed) {
  if (sys.dim > 3) return std::nullopt;
  Int radius = 0;
  for (const Int& x : seed) radius = std::max(radius, Int(abs(x)));
  if (radius > 12) return std::nullopt;
  const long r_max = radius.get_si();
  for (long r = 0; r <= r_max; ++r) {
    IntVec lambda(sys.dim, Int(-r));
    for (;;) {
      if (satisfies(sys, lambda)) return lambda;
      int k = sys.dim - 1;
      while (k >= 0 && lambda[k] == r) --k;
      if (k < 0) break;
      ++lambda[k];
      for (int j = k + 1; j < sys.dim; ++j) lambda[j] = -r;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<IntVec> strict_feasible(const SignSystem& sys) {
  auto sol = fourier_motzkin(to_constraints(sys), sys.dim);
  if (!sol) return std::nullopt;

  Int l = 1;
  for (const Rat& q : *sol) l = lcm(l, Int(q.get_den()));
  IntVec w(sys.dim);
  for (int j = 0; j < sys.dim; ++j) w[j] = Int((*sol)[j].get_num()) * (l / Int((*sol)[j].get_den()));
  w = primitive(std::move(w));

  if (auto nicer = polish(sys, w)) return *nicer;
  if (!satisfies(sys, w)) throw Error("integer scaling lost feasibility");  // homogeneous: cannot happen
  return w;
}

bool in_rational_cone(const IntVec& target, const std::vector<IntVec>& generators) {
  const int d = static_cast<int>(target.size());
  std::vector<LinearConstraint> cs;
  for (const IntVec& g : generators) {
    if (static_cast<int>(g.size()) != d) throw UsageError("cone generator arity mismatch");
    LinearConstraint c;
    c.coeffs.resize(d);
    for (int j = 0; j < d; ++j) c.coeffs[j] = Rat(g[j]);
    c.constant = 0;
    cs.push_back(std::move(c));
  }
  LinearConstraint sep;
  sep.coeffs.resize(d);
  for (int j = 0; j < d; ++j) sep.coeffs[j] = Rat(-target[j]);
  sep.constant = 0;
  sep.strict = true;
  cs.push_back(std::move(sep));
  // a separating functional exists exactly when target is outside the cone
  return !fourier_motzkin(cs, d).has_value();
}

}  // namespace thq
