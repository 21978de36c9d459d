#include <benchmark/benchmark.h>

#include <random>

#include "mtclab/catalog.hpp"
#include "mtclab/chain.hpp"
#include "mtclab/classifier.hpp"
#include "mtclab/cyclotomic.hpp"
#include "mtclab/fp_dims.hpp"
#include "mtclab/fusion_ring.hpp"
#include "mtclab/modular_data.hpp"
#include "mtclab/subcat.hpp"

using namespace mtclab;

static void BM_Validate(benchmark::State& state) {
  const auto r = state.range(0) == 0 ? gauged_rank17_ring() : cyclic_group_ring(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_fusion_ring(r));
}
BENCHMARK(BM_Validate)->Arg(9)->Arg(15)->Arg(0);

static void BM_FpDimsFibonacci(benchmark::State& state) {
  const auto r = deligne_product(fibonacci_ring(), fibonacci_ring());
  for (auto _ : state) benchmark::DoNotOptimize(fp_dims(r));
}
BENCHMARK(BM_FpDimsFibonacci);

static void BM_UniversalGrading(benchmark::State& state) {
  const auto r = gauged_rank17_ring();
  for (auto _ : state) benchmark::DoNotOptimize(universal_grading(r));
}
BENCHMARK(BM_UniversalGrading);

static void BM_CyclotomicMul(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> c(-5, 5);
  std::vector<Rational> pa(static_cast<std::size_t>(n)), pb(static_cast<std::size_t>(n));
  for (auto& x : pa) x = c(rng);
  for (auto& x : pb) x = c(rng);
  const auto a = Cyclotomic::from_polynomial(n, pa);
  const auto b = Cyclotomic::from_polynomial(n, pb);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMul)->Arg(15)->Arg(45);

static void BM_ModularVerify(benchmark::State& state) {
  const auto md = gauged_rank17_modular();
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_balancing(md));
    benchmark::DoNotOptimize(is_modular(md));
  }
}
BENCHMARK(BM_ModularVerify)->Unit(benchmark::kMillisecond);

static void BM_Classify(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(classify(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_Classify)->DenseRange(13, 23, 2)->Unit(benchmark::kMillisecond);

static void BM_BruteForceDims(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_dims(static_cast<int>(state.range(0)), 99));
}
BENCHMARK(BM_BruteForceDims)->Arg(13)->Arg(15)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
