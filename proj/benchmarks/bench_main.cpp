#include <benchmark/benchmark.h>

#include "qsenum/enumeration.hpp"
#include "qsenum/pommaret.hpp"
#include "qsenum/stability.hpp"
#include "qsenum/text.hpp"

using namespace qsenum;

static void BM_QuasiStableEnum(benchmark::State& state) {
  const auto p = parse_hilbert("6*z-3");
  const EnumerationOptions opts{static_cast<unsigned>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(quasi_stable_enum(0, 3, p, std::nullopt, opts));
}
BENCHMARK(BM_QuasiStableEnum)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_BorelEnum(benchmark::State& state) {
  const auto p = parse_hilbert("6*z-3");
  const Characteristic c(static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(borel_enum(0, 3, p, std::nullopt, c));
}
BENCHMARK(BM_BorelEnum)->Arg(0)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_QuasiStableEnumLarger(benchmark::State& state) {
  const auto p = parse_hilbert("7*z-5");
  for (auto _ : state) benchmark::DoNotOptimize(quasi_stable_enum(0, 3, p));
}
BENCHMARK(BM_QuasiStableEnumLarger)->Unit(benchmark::kMillisecond);

static void BM_Completion(benchmark::State& state) {
  const RingSpec ring(0, 3);
  const auto j = parse_ideal("(x3^2, x3*x2, x2^3, x3*x1^4, x2^2*x1^5, x1^9)", ring);
  for (auto _ : state) benchmark::DoNotOptimize(completion(j));
}
BENCHMARK(BM_Completion);

static void BM_PMinimal(benchmark::State& state) {
  const RingSpec ring(0, 3);
  const auto j = parse_ideal("(x3^2, x2^2)", ring);
  for (auto _ : state) benchmark::DoNotOptimize(p_minimal_terms(j, 6, Characteristic(2)));
}
BENCHMARK(BM_PMinimal);

static void BM_GotzmannNumber(benchmark::State& state) {
  const auto p = parse_hilbert("(z^2+3*z)/2 + 7");
  for (auto _ : state) benchmark::DoNotOptimize(gotzmann_number(p));
}
BENCHMARK(BM_GotzmannNumber);
BENCHMARK_MAIN();
