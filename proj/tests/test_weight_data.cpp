#include <doctest.h>

#include "oracles.hpp"
#include "thq/weight_data.hpp"

using namespace thq;

TEST_CASE("tuple canonicalization sorts by magnitude and flips signs") {
  auto [canonical, c] = canonicalize_tuple(IntVec{-2, 3, 1});
  CHECK(canonical == IntVec{1, 2, 3});
  // sorted magnitudes: 1, 2, 3 coming from positions 3, 1, 2 (1-based)
  CHECK(c.source == std::vector<int>{2, 0, 1});
  CHECK(c.flipped == std::vector<bool>{false, true, false});
  CHECK_FALSE(c.is_identity());

  CHECK(canonicalize_tuple(IntVec{1, 2, 3}).second.is_identity());

  // equal magnitudes keep original order (stable)
  auto tie = canonicalize_tuple(IntVec{2, 1, 2}).second;
  CHECK(tie.source == std::vector<int>{1, 0, 2});
}

TEST_CASE("weight data accepts valid tuples") {
  WeightData wd = build(IntVec{1, 2, 3});
  CHECK(wd.d == 1);
  CHECK(wd.n == 3);
  CHECK(wd.a(0, 0) == 1);
  CHECK(wd.a(0, 2) == 3);
  CHECK((wd.a * wd.kernel).is_zero());
  CHECK(wd.kernel.cols() == 2);
  CHECK(wd.tuple() == IntVec{1, 2, 3});
}

TEST_CASE("tuples are canonicalized before validation") {
  WeightData wd = build(IntVec{3, -1, 2});
  CHECK(wd.tuple() == IntVec{1, 2, 3});
  REQUIRE(wd.canon.has_value());
  CHECK(wd.canon->source == std::vector<int>{1, 2, 0});
  CHECK(wd.canon->flipped == std::vector<bool>{true, false, false});
}

TEST_CASE("validation failures carry condition and witness columns") {
  SUBCASE("zero entry in a tuple") {
    ValidationVerdict v = validate(IntMatrix{{0, 1, 2}});
    REQUIRE_FALSE(v.ok);
    CHECK(v.failures.size() == 2);
    CHECK(v.failures[0].condition == "minor_zero");
    CHECK(v.failures[0].columns == std::vector<int>{0});
    CHECK(v.failures[1].condition == "minor_gcd");
    CHECK(v.failures[1].columns == std::vector<int>{0, 2});
    CHECK(v.failures[1].value == 2);
  }
  SUBCASE("gcd failure in a tuple") {
    ValidationVerdict v = validate(IntMatrix{{1, 2, 2}});
    REQUIRE_FALSE(v.ok);
    REQUIRE(v.failures.size() == 1);
    CHECK(v.failures[0].condition == "minor_gcd");
    CHECK(v.failures[0].columns == std::vector<int>{1, 2});
    CHECK(v.failures[0].value == 2);
  }
  SUBCASE("too few columns") {
    ValidationVerdict v = validate(IntMatrix{{1, 2}});
    REQUIRE_FALSE(v.ok);
    CHECK(v.failures[0].condition == "shape");
  }
  SUBCASE("vanishing 2x2 minor") {
    ValidationVerdict v = validate(IntMatrix{{1, 0, 1, 2}, {0, 1, 1, 2}});
    REQUIRE_FALSE(v.ok);
    bool found = false;
    for (const auto& f : v.failures)
      if (f.condition == "minor_zero" && f.columns == std::vector<int>{2, 3})
        found = true;
    CHECK(found);
  }
  SUBCASE("build throws a structured error") {
    try {
      build(IntVec{1, 2, 2});
      FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
      REQUIRE(e.verdict.failures.size() == 1);
      // message renders columns 1-based for humans
      CHECK(std::string(e.what()).find("{2,3}") != std::string::npos);
    }
  }
}

TEST_CASE("matrix inputs validate both minor conditions") {
  // the running two-row example is accepted
  WeightData wd = build(IntMatrix{{1, 0, 1, 1, 1}, {0, 1, 1, 2, 3}});
  CHECK(wd.d == 2);
  CHECK(wd.n == 5);
  CHECK_FALSE(wd.canon.has_value());
  CHECK((wd.a * wd.kernel).is_zero());
  CHECK(wd.kernel.cols() == 3);

  // one-row matrices are treated as tuples, including canonicalization
  WeightData row = build(IntMatrix{{-2, 3, 1}});
  CHECK(row.tuple() == IntVec{1, 2, 3});
  CHECK(row.canon.has_value());

  // shape guard: n must be at least d + 2
  ValidationVerdict small = validate(IntMatrix{{1, 0, 1}, {0, 1, 1}});
  REQUIRE_FALSE(small.ok);
  CHECK(small.failures[0].condition == "shape");
}

TEST_CASE("gcd condition is checked on every d+1 column subset") {
  // columns {0,1,2} have the three maximal minors -2, -2, 2: no zero minor
  // anywhere, but this triple shares the factor 2
  ValidationVerdict v = validate(IntMatrix{{1, 1, 2, 0}, {1, -1, 0, 1}});
  REQUIRE_FALSE(v.ok);
  REQUIRE(v.failures.size() == 1);
  CHECK(v.failures[0].condition == "minor_gcd");
  CHECK(v.failures[0].columns == std::vector<int>{0, 1, 2});
  CHECK(v.failures[0].value == 2);
}

TEST_CASE("random valid data always passes validation") {
  oracles::Rng rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const int d = rng.uniform(1, 2);
    const int n = rng.uniform(d + 2, 5);
    WeightData wd = oracles::random_valid_weight_data(rng, d, n, 3);
    CHECK(validate(wd.a).ok);
    CHECK(oracles::rank_by_elimination(wd.a) == d);
    CHECK((wd.a * wd.kernel).is_zero());
  }
}
