#include "thq/snf.hpp"

#include <optional>
#include <utility>

#include "thq/errors.hpp"

namespace thq {

std::vector<Int> SmithForm::invariant_factors() const {
  std::vector<Int> out;
  const int k = std::min(s.rows(), s.cols());
  for (int i = 0; i < k; ++i)
    if (s(i, i) != 0) out.push_back(s(i, i));
  return out;
}

int SmithForm::rank() const { return static_cast<int>(invariant_factors().size()); }

namespace {

// Smallest |entry| != 0 in the submatrix with corner (t,t); ties go to the
// lowest row-major position. nullopt when the submatrix is zero.
std::optional<std::pair<int, int>> find_pivot(const IntMatrix& s, int t) {
  std::optional<std::pair<int, int>> best;
  Int best_abs = 0;
  for (int i = t; i < s.rows(); ++i)
    for (int j = t; j < s.cols(); ++j) {
      if (s(i, j) == 0) continue;
      Int a = abs(s(i, j));
      if (!best || a < best_abs) {
        best = {i, j};
        best_abs = a;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm f{IntMatrix::identity(m.rows()), m, IntMatrix::identity(m.cols())};
  IntMatrix& s = f.s;
  const int steps = std::min(m.rows(), m.cols());

  for (int t = 0; t < steps; ++t) {
    for (;;) {
      auto piv = find_pivot(s, t);
      if (!piv) {
        t = steps;  // remaining block is zero
        break;
      }
      s.swap_rows(t, piv->first);
      f.u.swap_rows(t, piv->first);
      s.swap_columns(t, piv->second);
      f.v.swap_columns(t, piv->second);

      bool dirty = false;
      for (int i = t + 1; i < s.rows(); ++i) {
        if (s(i, t) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        if (q != 0) {
          s.add_row_multiple(i, t, q);
          f.u.add_row_multiple(i, t, q);
        }
        if (s(i, t) != 0) dirty = true;  // remainder survives; repivot on it
      }
      if (dirty) continue;

      for (int j = t + 1; j < s.cols(); ++j) {
        if (s(t, j) == 0) continue;
        Int q;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        if (q != 0) {
          s.add_column_multiple(j, t, q);
          f.v.add_column_multiple(j, t, q);
        }
        if (s(t, j) != 0) dirty = true;
      }
      if (dirty) continue;

      // divisibility sweep: the pivot must divide every remaining entry
      bool fixed_up = false;
      for (int i = t + 1; i < s.rows() && !fixed_up; ++i)
        for (int j = t + 1; j < s.cols() && !fixed_up; ++j)
          if (s(i, j) % s(t, t) != 0) {
            s.add_row_multiple(t, i, Int(-1));  // row t += row i
            f.u.add_row_multiple(t, i, Int(-1));
            fixed_up = true;
          }
      if (!fixed_up) break;
    }
    if (t >= steps) break;
  }

  for (int t = 0; t < steps; ++t)
    if (s(t, t) < 0) {
      s.negate_row(t);
      f.u.negate_row(t);
    }
  return f;
}

int rank(const IntMatrix& m) { return smith_normal_form(m).rank(); }

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithForm f = smith_normal_form(m);
  std::vector<int> idx;
  for (int j = 0; j < m.cols(); ++j)
    if (j >= std::min(m.rows(), m.cols()) || f.s(j, j) == 0) idx.push_back(j);
  return f.v.select_columns(idx);
}

Int determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw UsageError("determinant of a non-square matrix");
  const int k = m.rows();
  if (k == 0) return 1;
  IntMatrix a = m;
  Int sign = 1, denom = 1;
  for (int t = 0; t + 1 < k; ++t) {
    if (a(t, t) == 0) {
      int p = -1;
      for (int i = t + 1; i < k; ++i)
        if (a(i, t) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      a.swap_rows(t, p);
      sign = -sign;
    }
    for (int i = t + 1; i < k; ++i) {
      for (int j = t + 1; j < k; ++j) {
        Int num = a(t, t) * a(i, j) - a(i, t) * a(t, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
      }
      a(i, t) = 0;
    }
    denom = a(t, t);
  }
  return sign * a(k - 1, k - 1);
}

std::vector<Minor> column_minors(const IntMatrix& m, int k) {
  std::vector<int> top(k);
  for (int i = 0; i < k; ++i) top[i] = i;
  return column_minors(m, k, top);
}

std::vector<Minor> column_minors(const IntMatrix& m, int k,
                                 const std::vector<int>& row_subset) {
  if (k < 0 || k > m.cols()) throw UsageError("minor size out of range");
  if (static_cast<int>(row_subset.size()) != k)
    throw UsageError("row subset size must match minor size");

  std::vector<Minor> out;
  std::vector<int> c(k);
  for (int i = 0; i < k; ++i) c[i] = i;
  for (;;) {
    out.push_back({c, determinant(m.select(row_subset, c))});
    // next k-combination of {0..cols-1} in lexicographic order
    int i = k - 1;
    while (i >= 0 && c[i] == m.cols() - k + i) --i;
    if (i < 0) break;
    ++c[i];
    for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  }
  return out;
}

}  // namespace thq
