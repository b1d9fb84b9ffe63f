#pragma once

#include <vector>

#include "thq/int_matrix.hpp"

namespace thq {

// Smith decomposition u * m * v == s with u, v unimodular and s diagonal,
// s(0,0) | s(1,1) | ... , diagonal entries non-negative.
struct SmithForm {
  IntMatrix u, s, v;
  std::vector<Int> invariant_factors() const;  // nonzero diagonal entries
  int rank() const;
};

// Deterministic: the pivot is always the entry of smallest absolute value in
// the working submatrix, ties broken by lowest row-major position.
SmithForm smith_normal_form(const IntMatrix& m);

int rank(const IntMatrix& m);

// Columns form a basis of { x : m x = 0 } over the integers (may be empty).
IntMatrix kernel_basis(const IntMatrix& m);

// Exact determinant (fraction-free elimination); m must be square.
Int determinant(const IntMatrix& m);

struct Minor {
  std::vector<int> columns;  // 0-based, strictly increasing
  Int det;
};

// Determinants of all k-column submatrices in lexicographic subset order.
// Rows used are row_subset when given, otherwise rows 0..k-1.
std::vector<Minor> column_minors(const IntMatrix& m, int k);
std::vector<Minor> column_minors(const IntMatrix& m, int k, const std::vector<int>& row_subset);

}  // namespace thq
