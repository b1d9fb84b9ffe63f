#pragma once

#include <optional>
#include <vector>

#include "thq/int_matrix.hpp"

namespace thq {

// coeffs . x + constant >= 0, or > 0 when strict.
struct LinearConstraint {
  RatVec coeffs;
  Rat constant;
  bool strict = false;
};

// Exact Fourier-Motzkin elimination. Returns a rational solution obtained by
// deterministic back-substitution, or nullopt when the system is infeasible.
std::optional<RatVec> fourier_motzkin(const std::vector<LinearConstraint>& cs, int num_vars);

// Homogeneous strict sign problem: find an integral lambda with
// <v, lambda> > 0 for every v in positive and < 0 for every v in negative.
struct SignSystem {
  std::vector<IntVec> positive;
  std::vector<IntVec> negative;
  int dim = 0;
};

bool satisfies(const SignSystem& sys, const IntVec& lambda);

// The returned witness is canonical: gcd-reduced, and for small systems the
// lexicographically smallest vector of minimal max-norm.
std::optional<IntVec> strict_feasible(const SignSystem& sys);

// Membership of target in the rational cone spanned by generators, decided
// through the separating-functional dual (a linear problem in dim variables).
bool in_rational_cone(const IntVec& target, const std::vector<IntVec>& generators);

}  // namespace thq
