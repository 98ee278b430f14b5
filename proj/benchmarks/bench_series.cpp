#include <benchmark/benchmark.h>

#include "sliceop/compose.hpp"
#include "sliceop/hardy.hpp"
#include "sliceop/moebius.hpp"
#include "sliceop/rng.hpp"
#include "sliceop/series.hpp"

namespace {

using namespace sliceop;

Series random_series(std::size_t deg, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Quaternion> c(deg + 1);
  for (auto& a : c) a = Quaternion{rng.normal(), rng.normal(), rng.normal(), rng.normal()};
  return Series(std::move(c));
}

void BM_star(benchmark::State& state) {
  const auto deg = static_cast<std::size_t>(state.range(0));
  const Series f = random_series(deg, 1);
  const Series g = random_series(deg, 2);
  for (auto _ : state) benchmark::DoNotOptimize(star(f, g));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_star)->Range(32, 512)->Complexity(benchmark::oNSquared);

void BM_evaluate(benchmark::State& state) {
  const Series f = random_series(256, 3);
  const Quaternion q{0.1, 0.2, -0.3, 0.4};
  for (auto _ : state) benchmark::DoNotOptimize(f.evaluate(q));
}
BENCHMARK(BM_evaluate);

void BM_compose_odot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series f = random_series(12, 4);
  Series phi = random_series(12, 5);
  phi.set_coeff(0, Quaternion{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(f, phi, CompositionVariant::odot_right, n));
  }
}
BENCHMARK(BM_compose_odot)->Arg(64)->Arg(128)->Arg(256);

void BM_compose_vlacci(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series f = random_series(12, 6);
  Series phi = random_series(12, 7);
  phi.set_coeff(0, Quaternion{});
  for (auto _ : state) {
    benchmark::DoNotOptimize(compose(f, phi, CompositionVariant::vlacci_right, n));
  }
}
BENCHMARK(BM_compose_vlacci)->Arg(32)->Arg(64)->Arg(128);

void BM_composition_matrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series phi = mobius_series(Quaternion{0.5}, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(composition_matrix(phi, n, OperatorSide::right_linear_C));
  }
}
BENCHMARK(BM_composition_matrix)->Arg(64)->Arg(128)->Arg(256);

void BM_operator_norm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Series phi = mobius_series(Quaternion{0.5}, n);
  const OperatorMatrix m = composition_matrix(phi, n, OperatorSide::right_linear_C);
  for (auto _ : state) benchmark::DoNotOptimize(operator_norm(m));
}
BENCHMARK(BM_operator_norm)->Arg(64)->Arg(128)->Arg(256);

}  // namespace

BENCHMARK_MAIN();
