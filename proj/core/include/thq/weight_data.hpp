#pragma once

#include <optional>
#include <string>
#include <vector>

#include "thq/errors.hpp"
#include "thq/int_matrix.hpp"

namespace thq {

// One violated admissibility condition. Indices are 0-based here; the
// presentation layer shifts to 1-based for people.
struct ValidationFailure {
  std::string condition;     // "shape" | "minor_zero" | "minor_gcd"
  std::vector<int> columns;  // offending column subset
  Int value;                 // the determinant or gcd that broke the rule
  std::string message() const;
};

struct ValidationVerdict {
  bool ok = false;
  std::vector<ValidationFailure> failures;
};

struct ValidationError : Error {
  explicit ValidationError(ValidationVerdict v);
  ValidationVerdict verdict;
};

// How a raw weight tuple was brought to canonical form: canonical slot k holds
// |raw[source[k]]|; flipped[k] records a sign change (z/w swap) at that slot.
struct Canonicalization {
  std::vector<int> source;
  std::vector<bool> flipped;
  bool is_identity() const;
};

// Validated input for the whole pipeline: the d x n weight matrix together
// with an integral basis of its kernel.
struct WeightData {
  int d = 0;
  int n = 0;
  IntMatrix a;                             // d x n, validated
  IntMatrix kernel;                        // n x (n-d), columns span ker(a)
  std::optional<Canonicalization> canon;   // present for tuple input

  IntVec tuple() const;  // row 0; meaningful when d == 1
};

// Sort by absolute value (stable) and drop signs. Zero entries are rejected.
std::pair<IntVec, Canonicalization> canonicalize_tuple(const IntVec& raw);

// Checks, in order: shape (d >= 1, n >= d + 2), no zero d x d column minor,
// and coprimality of the maximal minors of every d x (d+1) column subset.
// Reports every failure, not just the first.
ValidationVerdict validate(const IntMatrix& a);

// Throw ValidationError unless the data is admissible.
WeightData build(const IntVec& raw_tuple);
WeightData build(const IntMatrix& a);

}  // namespace thq
