#include "thq/hilbert.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "thq/errors.hpp"

namespace thq {

int InvariantMonomial::weight() const {
  return std::accumulate(u.begin(), u.end(), 0) + std::accumulate(v.begin(), v.end(), 0);
}

bool InvariantMonomial::operator<(const InvariantMonomial& o) const {
  const int a = weight(), b = o.weight();
  if (a != b) return a < b;
  if (u != o.u) return u < o.u;
  return v < o.v;
}

std::string InvariantMonomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](char name, const std::vector<int>& e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!first) os << "*";
      first = false;
      os << name << i + 1;
      if (e[i] > 1) os << "^" << e[i];
    }
  };
  emit('z', u);
  emit('w', v);
  if (first) os << "1";
  return os.str();
}

std::vector<InvariantMonomial> hilbert_basis(const WeightData& wd, int safety_cap) {
  const int n = wd.n;
  const int nn = 2 * n;

  // the defining system is (a | -a) x = 0 over x in N^{2n}
  std::vector<IntVec> colval(nn);
  for (int j = 0; j < n; ++j) {
    colval[j] = wd.a.column(j);
    colval[n + j] = colval[j];
    for (Int& x : colval[n + j]) x = -x;
  }

  struct Node {
    std::vector<int> x;
    IntVec val;
  };
  std::vector<Node> frontier;
  for (int j = 0; j < nn; ++j) {
    std::vector<int> e(nn, 0);
    e[j] = 1;
    frontier.push_back({std::move(e), colval[j]});
  }

  std::vector<std::vector<int>> minimal;
  auto dominated = [&](const std::vector<int>& x) {
    for (const auto& m : minimal) {
      bool ge = true;
      for (int j = 0; j < nn && ge; ++j) ge = m[j] <= x[j];
      if (ge) return true;
    }
    return false;
  };

  for (int level = 1; !frontier.empty(); ++level) {
    if (level > safety_cap)
      throw CapExceededError("monoid completion exceeded the degree cap", safety_cap);

    std::vector<Node> extend;
    for (Node& node : frontier) {
      if (is_zero(node.val))
        minimal.push_back(std::move(node.x));
      else
        extend.push_back(std::move(node));
    }

    // grow only in directions that decrease the residual (the completion
    // stays complete under this restriction), prune anything dominated by a
    // solution already found
    std::vector<Node> next;
    std::set<std::vector<int>> seen;
    for (const Node& node : extend)
      for (int j = 0; j < nn; ++j) {
        if (dot(node.val, colval[j]) >= 0) continue;
        std::vector<int> child = node.x;
        ++child[j];
        if (seen.contains(child) || dominated(child)) continue;
        IntVec val(node.val);
        for (int i = 0; i < wd.d; ++i) val[i] += colval[j][i];
        seen.insert(child);
        next.push_back({std::move(child), std::move(val)});
      }
    frontier = std::move(next);
  }

  std::vector<InvariantMonomial> basis;
  basis.reserve(minimal.size());
  for (const auto& x : minimal) {
    InvariantMonomial g;
    g.u.assign(x.begin(), x.begin() + n);
    g.v.assign(x.begin() + n, x.end());
    basis.push_back(std::move(g));
  }
  std::sort(basis.begin(), basis.end());
  return basis;
}

GradingInfo grading(const WeightData& wd, const std::vector<InvariantMonomial>& basis) {
  (void)wd;
  GradingInfo info;
  info.weights.reserve(basis.size());
  bool all_even = !basis.empty();
  for (const InvariantMonomial& g : basis) {
    const int w = g.weight();
    info.weights.push_back(w);
    info.maximal_weight = std::max(info.maximal_weight, w);
    all_even = all_even && w % 2 == 0;
  }
  info.half_gradable = all_even;
  if (all_even) {
    info.half_maximal_weight = info.maximal_weight / 2;
    info.omega_weight = 1;
  }
  return info;
}

FamilyCheck verify_family_generators(int n, int m, int safety_cap) {
  if (n < 3 || m < 1) throw UsageError("family needs n >= 3 and m >= 1");
  IntVec tuple(n, Int(1));
  tuple[n - 1] = m;
  WeightData wd = build(tuple);

  std::vector<InvariantMonomial> expected;
  auto mono = [&](std::vector<int> u, std::vector<int> v) {
    expected.push_back({std::move(u), std::move(v)});
  };
  // mixed pairs over the weight-1 block, plus the last diagonal
  for (int i = 0; i < n - 1; ++i)
    for (int j = 0; j < n - 1; ++j) {
      std::vector<int> u(n, 0), v(n, 0);
      u[i] = 1;
      v[j] = 1;
      mono(std::move(u), std::move(v));
    }
  {
    std::vector<int> u(n, 0), v(n, 0);
    u[n - 1] = 1;
    v[n - 1] = 1;
    mono(std::move(u), std::move(v));
  }
  // degree-m monomials in the weight-1 block against the heavy coordinate
  std::vector<int> beta(n - 1, 0);
  beta[0] = m;
  for (;;) {
    std::vector<int> u(n, 0), v(n, 0);
    std::copy(beta.begin(), beta.end(), u.begin());
    v[n - 1] = 1;
    mono(std::move(u), std::move(v));
    std::vector<int> u2(n, 0), v2(n, 0);
    std::copy(beta.begin(), beta.end(), v2.begin());
    u2[n - 1] = 1;
    mono(std::move(u2), std::move(v2));
    // next composition of m into n-1 parts, colex walk
    int k = -1;
    for (int i = 0; i < n - 2; ++i)
      if (beta[i] > 0) {
        k = i;
        break;
      }
    if (k < 0) break;
    const int carry = beta[k];
    beta[k] = 0;
    beta[0] = carry - 1;
    ++beta[k + 1];
  }

  std::sort(expected.begin(), expected.end());
  expected.erase(std::unique(expected.begin(), expected.end()), expected.end());

  std::vector<InvariantMonomial> basis = hilbert_basis(wd, safety_cap);

  FamilyCheck out;
  out.expected_count = expected.size();
  std::set_difference(expected.begin(), expected.end(), basis.begin(), basis.end(),
                      std::back_inserter(out.missing));
  std::set_difference(basis.begin(), basis.end(), expected.begin(), expected.end(),
                      std::back_inserter(out.extra));
  out.matches = out.missing.empty() && out.extra.empty();
  return out;
}

DiagonalRelation diagonal_relation(const WeightData& wd,
                                   const std::vector<InvariantMonomial>& basis) {
  DiagonalRelation rel;
  rel.coefficients = wd.a;
  rel.generator_index.assign(wd.n, -1);
  for (int i = 0; i < wd.n; ++i) {
    InvariantMonomial diag;
    diag.u.assign(wd.n, 0);
    diag.v.assign(wd.n, 0);
    diag.u[i] = diag.v[i] = 1;
    auto it = std::lower_bound(basis.begin(), basis.end(), diag);
    if (it != basis.end() && *it == diag)
      rel.generator_index[i] = static_cast<int>(it - basis.begin());
  }
  rel.all_diagonals_present =
      std::none_of(rel.generator_index.begin(), rel.generator_index.end(),
                   [](int i) { return i < 0; });
  return rel;
}

}  // namespace thq
