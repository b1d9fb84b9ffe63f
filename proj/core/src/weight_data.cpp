#include "thq/weight_data.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "thq/snf.hpp"

namespace thq {

std::string ValidationFailure::message() const {
  std::ostringstream os;
  os << condition;
  if (!columns.empty()) {
    os << ": columns {";
    for (std::size_t i = 0; i < columns.size(); ++i)
      os << (i ? "," : "") << columns[i] + 1;
    os << "}";
  }
  if (condition == "shape")
    os << ": need d >= 1 and n >= d + 2";
  else if (condition == "minor_zero")
    os << " give determinant 0";
  else if (condition == "minor_gcd")
    os << " have maximal minors with gcd " << value;
  return os.str();
}

namespace {

std::string summarize(const ValidationVerdict& v) {
  std::ostringstream os;
  os << "inadmissible weight data (" << v.failures.size() << " failure"
     << (v.failures.size() == 1 ? "" : "s") << ")";
  if (!v.failures.empty()) os << ": " << v.failures.front().message();
  return os.str();
}

}  // namespace

ValidationError::ValidationError(ValidationVerdict v)
    : Error(summarize(v)), verdict(std::move(v)) {}

bool Canonicalization::is_identity() const {
  for (std::size_t k = 0; k < source.size(); ++k)
    if (source[k] != static_cast<int>(k) || flipped[k]) return false;
  return true;
}

IntVec WeightData::tuple() const { return a.row(0); }

std::pair<IntVec, Canonicalization> canonicalize_tuple(const IntVec& raw) {
  const int n = static_cast<int>(raw.size());
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&](int i, int j) { return abs(raw[i]) < abs(raw[j]); });
  IntVec canonical(n);
  Canonicalization rec;
  rec.source = idx;
  rec.flipped.resize(n);
  for (int k = 0; k < n; ++k) {
    canonical[k] = abs(raw[idx[k]]);
    rec.flipped[k] = raw[idx[k]] < 0;
  }
  return {canonical, rec};
}

ValidationVerdict validate(const IntMatrix& a) {
  ValidationVerdict v;
  const int d = a.rows();
  const int n = a.cols();

  if (d < 1 || n < d + 2) v.failures.push_back({"shape", {}, Int(0)});
  if (d < 1 || n < d) {
    v.ok = v.failures.empty();
    return v;
  }

  // every d x d column minor must be nonzero
  for (const Minor& m : column_minors(a, d))
    if (m.det == 0) v.failures.push_back({"minor_zero", m.columns, Int(0)});

  // the d maximal minors of every d x (d+1) column block must be coprime
  if (n >= d + 1) {
    std::vector<int> t(d + 1);
    for (int i = 0; i <= d; ++i) t[i] = i;
    for (;;) {
      Int g = 0;
      std::vector<int> sub(d);
      for (int drop = 0; drop <= d; ++drop) {
        for (int i = 0, j = 0; i <= d; ++i)
          if (i != drop) sub[j++] = t[i];
        g = gcd(g, determinant(a.select_columns(sub)));
      }
      if (g != 1) v.failures.push_back({"minor_gcd", t, g});
      int i = d;
      while (i >= 0 && t[i] == n - (d + 1) + i) --i;
      if (i < 0) break;
      ++t[i];
      for (int j = i + 1; j <= d; ++j) t[j] = t[j - 1] + 1;
    }
  }

  v.ok = v.failures.empty();
  return v;
}

namespace {

WeightData finish(IntMatrix a, std::optional<Canonicalization> canon) {
  ValidationVerdict v = validate(a);
  if (!v.ok) throw ValidationError(std::move(v));
  WeightData wd;
  wd.d = a.rows();
  wd.n = a.cols();
  wd.kernel = kernel_basis(a);
  wd.a = std::move(a);
  wd.canon = std::move(canon);
  if (wd.kernel.cols() != wd.n - wd.d || !(wd.a * wd.kernel).is_zero())
    throw Error("kernel basis construction failed");
  return wd;
}

}  // namespace

WeightData build(const IntVec& raw_tuple) {
  auto [canonical, rec] = canonicalize_tuple(raw_tuple);
  return finish(IntMatrix::from_rows({canonical}), std::move(rec));
}

WeightData build(const IntMatrix& a) {
  // one-row data is weight-tuple data; bring it to the canonical form first
  if (a.rows() == 1) return build(a.row(0));
  return finish(a, std::nullopt);
}

}  // namespace thq
