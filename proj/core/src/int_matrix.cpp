#include "thq/int_matrix.hpp"

#include <sstream>

#include "thq/errors.hpp"

namespace thq {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw UsageError("matrix dimensions must be non-negative");
  e_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  e_.reserve(static_cast<std::size_t>(rows_) * cols_);
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw UsageError("ragged matrix literal");
    for (int x : r) e_.emplace_back(x);
  }
}

IntMatrix IntMatrix::identity(int k) {
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw UsageError("ragged row list");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVec>& cols) {
  const int c = static_cast<int>(cols.size());
  const int r = c == 0 ? 0 : static_cast<int>(cols[0].size());
  IntMatrix m(r, c);
  for (int j = 0; j < c; ++j) {
    if (static_cast<int>(cols[j].size()) != r) throw UsageError("ragged column list");
    for (int i = 0; i < r; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

IntVec IntMatrix::row(int i) const {
  IntVec out(cols_);
  for (int j = 0; j < cols_; ++j) out[j] = (*this)(i, j);
  return out;
}

IntVec IntMatrix::column(int j) const {
  IntVec out(rows_);
  for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
  return out;
}

IntMatrix IntMatrix::select_columns(const std::vector<int>& idx) const {
  IntMatrix m(rows_, static_cast<int>(idx.size()));
  for (int j = 0; j < m.cols_; ++j) {
    if (idx[j] < 0 || idx[j] >= cols_) throw UsageError("column index out of range");
    for (int i = 0; i < rows_; ++i) m(i, j) = (*this)(i, idx[j]);
  }
  return m;
}

IntMatrix IntMatrix::select(const std::vector<int>& row_idx,
                            const std::vector<int>& col_idx) const {
  IntMatrix m(static_cast<int>(row_idx.size()), static_cast<int>(col_idx.size()));
  for (int i = 0; i < m.rows_; ++i) {
    if (row_idx[i] < 0 || row_idx[i] >= rows_) throw UsageError("row index out of range");
    for (int j = 0; j < m.cols_; ++j) {
      if (col_idx[j] < 0 || col_idx[j] >= cols_) throw UsageError("column index out of range");
      m(i, j) = (*this)(row_idx[i], col_idx[j]);
    }
  }
  return m;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& x : e_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

void IntMatrix::swap_rows(int i, int k) {
  if (i == k) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
}

void IntMatrix::swap_columns(int j, int k) {
  if (j == k) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
}

void IntMatrix::negate_row(int i) {
  for (int j = 0; j < cols_; ++j) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::negate_column(int j) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) = -(*this)(i, j);
}

void IntMatrix::add_row_multiple(int i, int k, const Int& q) {
  for (int j = 0; j < cols_; ++j) (*this)(i, j) -= q * (*this)(k, j);
}

void IntMatrix::add_column_multiple(int j, int k, const Int& q) {
  for (int i = 0; i < rows_; ++i) (*this)(i, j) -= q * (*this)(i, k);
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows_; ++i) {
    os << (i ? " [" : "[");
    for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  os << "]";
  return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product shape mismatch");
  IntMatrix m(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) m(i, j) += aik * b(k, j);
    }
  return m;
}

IntVec operator*(const IntMatrix& a, const IntVec& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw UsageError("matrix-vector shape mismatch");
  IntVec out(a.rows(), Int(0));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

Int dot(const IntVec& a, const IntVec& b) {
  if (a.size() != b.size()) throw UsageError("dot product length mismatch");
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(const IntVec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

IntVec primitive(IntVec v) {
  Int g = content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
  return v;
}

std::string to_string(const IntVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  os << ")";
  return os.str();
}

}  // namespace thq
