#include <benchmark/benchmark.h>

#include <random>

#include "thq/chambers.hpp"
#include "thq/errors.hpp"
#include "thq/hilbert.hpp"
#include "thq/orbits.hpp"
#include "thq/snf.hpp"
#include "thq/support_pattern.hpp"
#include "thq/weight_data.hpp"

namespace {

// generator computation for the unit-weight family (1,...,1,m)
void BM_HilbertBasisFamily(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int m = static_cast<int>(state.range(1));
  thq::IntVec a(n, thq::Int(1));
  a[n - 1] = m;
  const thq::WeightData wd = thq::build(a);
  for (auto _ : state) {
    auto basis = thq::hilbert_basis(wd);
    benchmark::DoNotOptimize(basis);
  }
}
BENCHMARK(BM_HilbertBasisFamily)
    ->Args({3, 1})
    ->Args({3, 5})
    ->Args({4, 3})
    ->Args({5, 2})
    ->Args({5, 5});

thq::IntMatrix random_matrix(int rows, int cols, int spread, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dist(-spread, spread);
  thq::IntMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const thq::IntMatrix m = random_matrix(size, size + 2, 9, 20'09'01 + size);
  for (auto _ : state) {
    auto snf = thq::smith_normal_form(m);
    benchmark::DoNotOptimize(snf);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

// point classification across every support pattern of a plane example
void BM_ClassifySweep(benchmark::State& state) {
  const thq::WeightData wd =
      thq::build(thq::IntMatrix{{1, 0, 1, 1, 1}, {0, 1, 1, 2, 3}});
  const auto patterns = thq::SupportPattern::enumerate_all(wd.n);
  for (auto _ : state) {
    int finite = 0;
    for (const auto& p : patterns) {
      try {
        if (thq::classify(wd, p) != thq::PointClass::PositiveDimStabilizer) ++finite;
      } catch (const thq::UnrealizablePatternError&) {
      }
    }
    benchmark::DoNotOptimize(finite);
  }
}
BENCHMARK(BM_ClassifySweep)->Unit(benchmark::kMillisecond);

void BM_ChamberDecomposition(benchmark::State& state) {
  const thq::WeightData wd =
      thq::build(thq::IntMatrix{{1, 0, 1, 1, 1}, {0, 1, 1, 2, 3}});
  for (auto _ : state) {
    auto dec = thq::chambers(wd);
    benchmark::DoNotOptimize(dec);
  }
}
BENCHMARK(BM_ChamberDecomposition);

}  // namespace

BENCHMARK_MAIN();
