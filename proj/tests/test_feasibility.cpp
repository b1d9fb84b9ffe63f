#include <doctest.h>

#include "oracles.hpp"
#include "thq/feasibility.hpp"

using namespace thq;

namespace {

SignSystem make_system(const std::vector<IntVec>& pos,
                       const std::vector<IntVec>& neg, int dim) {
  SignSystem sys;
  sys.positive = pos;
  sys.negative = neg;
  sys.dim = dim;
  return sys;
}

}  // namespace

TEST_CASE("strict feasibility on pinned sign systems") {
  SUBCASE("two opposed dimensions") {
    // <(1,0), y> > 0 and <(1,1), y> < 0 has the canonical small witness
    auto w = strict_feasible(make_system({{1, 0}}, {{1, 1}}, 2));
    REQUIRE(w.has_value());
    CHECK(*w == IntVec{1, -2});
  }
  SUBCASE("one dimension positive") {
    auto w = strict_feasible(make_system({{3}}, {}, 1));
    REQUIRE(w.has_value());
    CHECK(*w == IntVec{1});
  }
  SUBCASE("one dimension negative") {
    auto w = strict_feasible(make_system({}, {{2}}, 1));
    REQUIRE(w.has_value());
    CHECK(*w == IntVec{-1});
  }
  SUBCASE("orthant witness") {
    auto w = strict_feasible(make_system({{1, 0}, {0, 1}}, {}, 2));
    REQUIRE(w.has_value());
    CHECK(*w == IntVec{1, 1});
  }
  SUBCASE("contradictory pair is infeasible") {
    CHECK_FALSE(strict_feasible(make_system({{1, 2}}, {{1, 2}}, 2)));
  }
  SUBCASE("empty system accepts the origin") {
    auto w = strict_feasible(make_system({}, {}, 3));
    REQUIRE(w.has_value());
    CHECK(*w == IntVec{0, 0, 0});
  }
}

TEST_CASE("strict feasibility matches a box-scan oracle") {
  oracles::Rng rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = rng.uniform(1, 3);
    SignSystem sys;
    sys.dim = dim;
    const int rows = rng.uniform(0, 4);
    for (int r = 0; r < rows; ++r) {
      IntVec v(dim);
      for (int j = 0; j < dim; ++j) v[j] = rng.uniform(-3, 3);
      if (is_zero(v)) continue;
      (rng.uniform(0, 1) ? sys.positive : sys.negative).push_back(v);
    }
    auto w = strict_feasible(sys);
    auto oracle = oracles::box_strict_witness(sys, 6);
    // the oracle box is finite; feasible cones always meet it after scaling,
    // so the two verdicts must agree
    CHECK(w.has_value() == oracle.has_value());
    if (w) CHECK(satisfies(sys, *w));
  }
}

TEST_CASE("fourier motzkin handles mixed strictness") {
  // x > 0, y > 0, x + y < 1 is feasible; with x + y < 0 it is not
  auto mk = [](const RatVec& c, const Rat& k, bool strict) {
    LinearConstraint lc;
    lc.coeffs = c;
    lc.constant = k;
    lc.strict = strict;
    return lc;
  };
  std::vector<LinearConstraint> feas = {
      mk({1, 0}, 0, true), mk({0, 1}, 0, true), mk({-1, -1}, 1, true)};
  auto w = fourier_motzkin(feas, 2);
  REQUIRE(w.has_value());
  CHECK((*w)[0] > 0);
  CHECK((*w)[1] > 0);
  CHECK((*w)[0] + (*w)[1] < 1);

  std::vector<LinearConstraint> infeas = {
      mk({1, 0}, 0, true), mk({0, 1}, 0, true), mk({-1, -1}, 0, false)};
  CHECK_FALSE(fourier_motzkin(infeas, 2).has_value());

  // non-strict version of the same boundary point is feasible
  std::vector<LinearConstraint> weak = {
      mk({1, 0}, 0, false), mk({0, 1}, 0, false), mk({-1, -1}, 0, false)};
  auto w2 = fourier_motzkin(weak, 2);
  REQUIRE(w2.has_value());
  CHECK((*w2)[0] == 0);
  CHECK((*w2)[1] == 0);
}

TEST_CASE("cone membership agrees with caratheodory oracle") {
  SUBCASE("pinned plane cone") {
    std::vector<IntVec> gens = {{1, 0}, {1, 1}};
    CHECK(in_rational_cone(IntVec{2, 1}, gens));
    CHECK(in_rational_cone(IntVec{1, 0}, gens));
    CHECK_FALSE(in_rational_cone(IntVec{-1, 0}, gens));
    CHECK_FALSE(in_rational_cone(IntVec{0, -1}, gens));
    CHECK(in_rational_cone(IntVec{0, 0}, gens));
  }
  SUBCASE("random cones in low dimension") {
    oracles::Rng rng(555);
    for (int trial = 0; trial < 150; ++trial) {
      const int dim = rng.uniform(1, 3);
      std::vector<IntVec> gens;
      const int g = rng.uniform(1, 4);
      for (int i = 0; i < g; ++i) {
        IntVec v(dim);
        for (int j = 0; j < dim; ++j) v[j] = rng.uniform(-2, 2);
        gens.push_back(v);
      }
      IntVec target(dim);
      for (int j = 0; j < dim; ++j) target[j] = rng.uniform(-3, 3);
      CHECK(in_rational_cone(target, gens) ==
            oracles::cone_member_by_caratheodory(target, gens));
    }
  }
}
