#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace thq {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense row-major matrix over the integers. All arithmetic is exact.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);  // zero-filled
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static IntMatrix identity(int k);
  static IntMatrix from_rows(const std::vector<IntVec>& rows);
  static IntMatrix from_columns(const std::vector<IntVec>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& operator()(int i, int j) { return e_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i) * cols_ + j];
  }

  IntVec row(int i) const;
  IntVec column(int j) const;
  IntMatrix select_columns(const std::vector<int>& idx) const;
  IntMatrix select(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
  IntMatrix transposed() const;

  bool is_zero() const;
  bool operator==(const IntMatrix& o) const;
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  void swap_rows(int i, int k);
  void swap_columns(int j, int k);
  void negate_row(int i);
  void negate_column(int j);
  // row i -= q * row k; column j -= q * column k
  void add_row_multiple(int i, int k, const Int& q);
  void add_column_multiple(int j, int k, const Int& q);

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> e_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntVec operator*(const IntMatrix& a, const IntVec& x);

Int dot(const IntVec& a, const IntVec& b);
bool is_zero(const IntVec& v);

// gcd of the absolute values; 0 for the empty or all-zero vector.
Int content(const IntVec& v);
// v divided by its content; the zero vector is returned unchanged.
IntVec primitive(IntVec v);

std::string to_string(const IntVec& v);

}  // namespace thq
