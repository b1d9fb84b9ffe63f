#pragma once

#include <optional>
#include <vector>

#include "thq/weight_data.hpp"

namespace thq {

// A torus-invariant monomial z^u w^v, recorded by its exponent vectors.
struct InvariantMonomial {
  std::vector<int> u, v;

  int weight() const;  // total degree |u| + |v|
  bool operator==(const InvariantMonomial& o) const { return u == o.u && v == o.v; }
  // canonical order: total degree, then exponents lexicographically
  bool operator<(const InvariantMonomial& o) const;
  std::string to_string() const;  // e.g. "z1*z2*w3^2"
};

// Minimal generating set of the invariant monomial ring: the Hilbert basis of
// { (u, v) >= 0 : a u = a v }, computed by incremental completion. The search
// expands degree by degree and stops by itself once no candidate survives;
// safety_cap aborts runs that leave the supported instance range
// (CapExceededError).
std::vector<InvariantMonomial> hilbert_basis(const WeightData& wd, int safety_cap = 64);

struct GradingInfo {
  std::vector<int> weights;  // aligned with the generator list
  int maximal_weight = 0;
  bool half_gradable = false;              // every generator weight even
  std::optional<int> half_maximal_weight;  // maximal weight after halving
  int omega_weight = 2;                    // symplectic form; 1 when halved
};

GradingInfo grading(const WeightData& wd, const std::vector<InvariantMonomial>& basis);

// Compare the computed basis for the weight tuple (1, ..., 1, m) against the
// closed-form generator list for that family.
struct FamilyCheck {
  bool matches = false;
  std::size_t expected_count = 0;
  std::vector<InvariantMonomial> missing, extra;
};

FamilyCheck verify_family_generators(int n, int m, int safety_cap = 64);

// The diagonal generators z_i w_i all occur in the basis and, against each
// weight row, sum to a moment map component -- hence to zero on the fiber.
struct DiagonalRelation {
  std::vector<int> generator_index;  // basis position of z_i w_i, length n
  IntMatrix coefficients;            // the weight matrix, one relation per row
  bool all_diagonals_present = false;
};

DiagonalRelation diagonal_relation(const WeightData& wd,
                                   const std::vector<InvariantMonomial>& basis);

}  // namespace thq
