#include <benchmark/benchmark.h>

#include <random>

#include "goorbit/classify.hpp"

using namespace goorbit;

namespace {

Scalar dense(std::mt19937_64& rng) {
  Scalar s;
  for (size_t i = 0; i < Scalar::kDim; ++i)
    s.set_coeff(i, Rational(static_cast<long long>(rng() % 41) - 20, static_cast<long long>(rng() % 9) + 1));
  return s;
}

}  // namespace

static void BM_ScalarMul(benchmark::State& st) {
  std::mt19937_64 rng(1);
  Scalar a = dense(rng), b = dense(rng);
  for (auto _ : st) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_ScalarMul);

static void BM_ScalarInverse(benchmark::State& st) {
  std::mt19937_64 rng(2);
  Scalar a = dense(rng);
  for (auto _ : st) benchmark::DoNotOptimize(a.inverse());
}
BENCHMARK(BM_ScalarInverse);

static void BM_Kernel(benchmark::State& st) {
  const size_t n = static_cast<size_t>(st.range(0));
  std::mt19937_64 rng(3);
  Mat m(n, n);
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = Scalar(Rational(static_cast<long long>(rng() % 7) - 3));
  for (auto _ : st) benchmark::DoNotOptimize(kernel(m));
}
BENCHMARK(BM_Kernel)->Arg(6)->Arg(11)->Arg(14);

static void BM_GeodesicSolve(benchmark::State& st) {
  auto m = metric_from_blocks(space_by_id("g2.3"), {Scalar(2), Scalar(1)});
  auto xs = random_samples(m.space->dim_m(), 64, 42);
  size_t i = 0;
  for (auto _ : st) benchmark::DoNotOptimize(geodesic_lemma_solve(m, xs[i++ % xs.size()]));
}
BENCHMARK(BM_GeodesicSolve);

static void BM_GoSampleCheck(benchmark::State& st) {
  auto fam = space_by_id("c2.1");
  auto m = fibration_metric(fam, fam->subalgebra("sp1xsp1"), Scalar(2));
  for (auto _ : st) benchmark::DoNotOptimize(go_sample_check(m, 200, 42));
}
BENCHMARK(BM_GoSampleCheck)->Unit(benchmark::kMillisecond);

static void BM_IsotypicDecompose(benchmark::State& st) {
  auto s = space_by_id("g2.2");
  for (auto _ : st) benchmark::DoNotOptimize(isotypic_decompose(*s));
}
BENCHMARK(BM_IsotypicDecompose)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
