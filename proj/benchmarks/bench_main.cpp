#include <benchmark/benchmark.h>

#include <numbers>

#include "extremal/basis.hpp"
#include "extremal/constructions.hpp"
#include "extremal/random.hpp"
#include "extremal/sphere_opt.hpp"
#include "extremal/verify.hpp"

using namespace extremal;

namespace {

NormSpec sample_norm(std::size_t n, std::size_t m, std::uint64_t seed = 7) {
  Rng rng(seed);
  return random_norm(rng, ScalarField::Real, n, m);
}

void BM_MaxOnSphere(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = sample_norm(n, 4 * n);
  const auto s = Subspace::whole(ScalarField::Real, n);
  for (auto _ : state) benchmark::DoNotOptimize(max_on_sphere(f, s).value);
}
BENCHMARK(BM_MaxOnSphere)->DenseRange(2, 4);

void BM_MinOnSphere(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = sample_norm(n, 4 * n);
  const auto s = Subspace::whole(ScalarField::Real, n);
  for (auto _ : state) benchmark::DoNotOptimize(min_on_sphere(f, s).value);
}
BENCHMARK(BM_MinOnSphere)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_MinimalBasis(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = sample_norm(n, 4 * n);
  for (auto _ : state) benchmark::DoNotOptimize(minimal_basis(f).values);
}
BENCHMARK(BM_MinimalBasis)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_UpperRatioVertexEnum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const auto f = sample_norm(n, m);
  const auto b = maximal_basis(f);
  for (auto _ : state) benchmark::DoNotOptimize(upper_ratio(f, b).ratio);
}
BENCHMARK(BM_UpperRatioVertexEnum)
    ->Args({2, 8})
    ->Args({3, 12})
    ->Args({4, 16})
    ->Unit(benchmark::kMillisecond);

void BM_UpperRatioEdgeWalk(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto f = sample_norm(n, 4 * n);
  const auto b = maximal_basis(f);
  RatioOptions opts;
  opts.force = RatioOptions::Force::Ascent;
  for (auto _ : state) benchmark::DoNotOptimize(upper_ratio(f, b, opts).ratio);
}
BENCHMARK(BM_UpperRatioEdgeWalk)->DenseRange(2, 6)->Unit(benchmark::kMillisecond);

void BM_LowerSideCheck(benchmark::State& state) {
  const auto f = sample_norm(4, 16);
  const auto b = maximal_basis(f);
  for (auto _ : state) benchmark::DoNotOptimize(lower_side_check(f, b, 10000).passed);
}
BENCHMARK(BM_LowerSideCheck)->Unit(benchmark::kMillisecond);

void BM_MaxConstruction(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const auto out = build_max_construction(n, 0.999, 0.995 * std::numbers::pi);
    benchmark::DoNotOptimize(witness_ratio(out.norm, out.expected_basis, out.witness).ratio);
  }
}
BENCHMARK(BM_MaxConstruction)->DenseRange(2, 6);

}  // namespace
BENCHMARK_MAIN();
