#include <doctest.h>

#include <algorithm>
#include <map>

#include "oracles.hpp"
#include "thq/hilbert.hpp"

using namespace thq;

TEST_CASE("generators of the weight (1,2,3) ring, frozen") {
  WeightData wd = build(IntVec{1, 2, 3});
  auto basis = hilbert_basis(wd);

  std::vector<InvariantMonomial> expected = {
      {{1, 0, 0}, {1, 0, 0}}, {{0, 1, 0}, {0, 1, 0}}, {{0, 0, 1}, {0, 0, 1}},
      {{0, 0, 1}, {1, 1, 0}}, {{0, 1, 0}, {2, 0, 0}}, {{1, 1, 0}, {0, 0, 1}},
      {{2, 0, 0}, {0, 1, 0}}, {{0, 0, 1}, {3, 0, 0}}, {{0, 2, 0}, {1, 0, 1}},
      {{1, 0, 1}, {0, 2, 0}}, {{3, 0, 0}, {0, 0, 1}}, {{0, 0, 2}, {0, 3, 0}},
      {{0, 3, 0}, {0, 0, 2}}};
  std::sort(expected.begin(), expected.end());
  CHECK(basis == expected);

  std::map<int, int> by_weight;
  for (const auto& g : basis) ++by_weight[g.weight()];
  CHECK(by_weight == std::map<int, int>{{2, 3}, {3, 4}, {4, 4}, {5, 2}});

  CHECK(std::is_sorted(basis.begin(), basis.end()));
  CHECK(basis.front().to_string() == "z3*w3");
  CHECK(basis.back().to_string() == "z2^3*w3^2");
}

TEST_CASE("basis elements are invariants and minimal") {
  oracles::Rng rng(616);
  for (int trial = 0; trial < 12; ++trial) {
    const int d = rng.uniform(1, 2);
    const int n = rng.uniform(d + 2, 4);
    WeightData wd = oracles::random_valid_weight_data(rng, d, n, 3);
    auto basis = hilbert_basis(wd);
    REQUIRE_FALSE(basis.empty());

    int max_weight = 0;
    for (const auto& g : basis) {
      IntVec u(g.u.begin(), g.u.end()), v(g.v.begin(), g.v.end());
      CHECK(wd.a * u == wd.a * v);  // invariance
      max_weight = std::max(max_weight, g.weight());
    }
    // set equality against the brute enumeration; the cap of twice the largest
    // produced degree would expose generators the completion stopped short of
    auto expected = oracles::brute_minimal_generators(wd, 2 * max_weight);
    CHECK(basis == expected);
  }
}

TEST_CASE("closed-form family generator lists") {
  for (int n : {3, 4}) {
    for (int m : {1, 2, 3}) {
      CAPTURE(n);
      CAPTURE(m);
      FamilyCheck fc = verify_family_generators(n, m);
      CHECK(fc.matches);
      CHECK(fc.missing.empty());
      CHECK(fc.extra.empty());
      const std::size_t binom = [&] {
        std::size_t r = 1;  // C(m + n - 2, n - 2)
        for (int i = 1; i <= n - 2; ++i) r = r * (m + i) / i;
        return r;
      }();
      CHECK(fc.expected_count == static_cast<std::size_t>((n - 1) * (n - 1)) + 1 + 2 * binom);
    }
  }
}

TEST_CASE("grading of the invariant ring") {
  SUBCASE("weights follow the generator degrees") {
    WeightData wd = build(IntVec{1, 2, 3});
    auto basis = hilbert_basis(wd);
    GradingInfo g = grading(wd, basis);
    REQUIRE(g.weights.size() == basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(g.weights[i] == basis[i].weight());
    CHECK(g.maximal_weight == 5);
    CHECK_FALSE(g.half_gradable);
    CHECK_FALSE(g.half_maximal_weight.has_value());
    CHECK(g.omega_weight == 2);
  }
  SUBCASE("odd m in the unit family halves the grading") {
    WeightData wd = build(IntVec{1, 1, 3});
    auto basis = hilbert_basis(wd);
    GradingInfo g = grading(wd, basis);
    CHECK(g.maximal_weight == 4);
    CHECK(g.half_gradable);
    REQUIRE(g.half_maximal_weight.has_value());
    CHECK(*g.half_maximal_weight == 2);
    CHECK(g.omega_weight == 1);
  }
  SUBCASE("even m does not halve") {
    WeightData wd = build(IntVec{1, 1, 2});
    auto basis = hilbert_basis(wd);
    CHECK(basis.size() == 11);
    GradingInfo g = grading(wd, basis);
    CHECK(g.maximal_weight == 3);
    CHECK_FALSE(g.half_gradable);
    CHECK(g.omega_weight == 2);
  }
}

TEST_CASE("safety cap aborts oversize searches") {
  WeightData wd = build(IntVec{1, 2, 3});
  try {
    hilbert_basis(wd, 2);
    FAIL("expected CapExceededError");
  } catch (const CapExceededError& e) {
    CHECK(e.cap == 2);
  }
}

TEST_CASE("diagonal monomials satisfy the weight row relations") {
  WeightData wd = build(IntVec{1, 2, 3});
  auto basis = hilbert_basis(wd);
  DiagonalRelation rel = diagonal_relation(wd, basis);
  CHECK(rel.all_diagonals_present);
  REQUIRE(rel.generator_index.size() == 3);
  for (int i = 0; i < 3; ++i) {
    const auto& g = basis[rel.generator_index[i]];
    CHECK(g.u == g.v);
    CHECK(g.u[i] == 1);
    CHECK(g.weight() == 2);
  }
  CHECK(rel.coefficients == wd.a);
}
