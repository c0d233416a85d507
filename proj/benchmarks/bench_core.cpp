#include <benchmark/benchmark.h>

#include "padwav/mra.hpp"
#include "padwav/sampling.hpp"
#include "padwav/vladimirov.hpp"

using namespace padwav;

namespace {

std::vector<AffineParams> affine_cases(int p, int count) {
  Rng rng(11);
  std::vector<AffineParams> out;
  for (int i = 0; i < count; ++i) out.emplace_back(random_finite(rng, p, -6, 6, 6), random_finite(rng, p, -6, 6, 8));
  return out;
}

void BM_Classify(benchmark::State& state) {
  const auto cases = affine_cases(static_cast<int>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(classify_affine(cases[i++ % cases.size()]));
}
BENCHMARK(BM_Classify)->Arg(2)->Arg(3)->Arg(5);

void BM_AffineWaveletAt(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto cases = affine_cases(p, 64);
  Rng rng(12);
  std::vector<PAdic> xs;
  for (const auto& ab : cases) xs.push_back(random_point_in(rng, Ball::make(ab.b, ab.a.valuation()), 6));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(affine_wavelet_at(cases[i % cases.size()], xs[i % xs.size()]));
    ++i;
  }
}
BENCHMARK(BM_AffineWaveletAt)->Arg(2)->Arg(5);

void BM_InnerProduct(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  Rng rng(13);
  const SchwartzFunction f = random_function(rng, p, 3, 2, static_cast<int>(state.range(1)));
  const SchwartzFunction g = random_function(rng, p, 2, 2, static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(inner_product(f, g));
}
BENCHMARK(BM_InnerProduct)->Args({2, 8})->Args({3, 32})->Args({5, 64});

void BM_ApplyPointwise(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const SchwartzFunction psi = basis_wavelet(WaveletIndex(-2, CosetRep(p), 1));
  const VladimirovParams params(0.7, p);
  Rng rng(14);
  const auto xs = sample_points(rng, wavelet_support(WaveletIndex(-2, CosetRep(p), 1)), 64);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(apply_pointwise(psi, params, xs[i++ % xs.size()]));
}
BENCHMARK(BM_ApplyPointwise)->Arg(2)->Arg(3)->Arg(5);

void BM_CoefficientTable(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  Rng rng(15);
  const SchwartzFunction f = random_function(rng, p, 2, 2, 6);
  for (auto _ : state) benchmark::DoNotOptimize(coefficient_table(f, -1, 4));
}
BENCHMARK(BM_CoefficientTable)->Arg(2)->Arg(3);

void BM_Project(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  Rng rng(16);
  const SchwartzFunction f = random_function(rng, p, 3, 2, 16);
  for (auto _ : state) benchmark::DoNotOptimize(project(f, 0));
}
BENCHMARK(BM_Project)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();
