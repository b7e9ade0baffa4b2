#include <benchmark/benchmark.h>

#include "cbperm/avoiders.hpp"
#include "cbperm/codeword.hpp"
#include "cbperm/wilf.hpp"

using namespace cbperm;

static void BM_CountIncremental(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_sequence(forbidden_patterns(), n));
}
BENCHMARK(BM_CountIncremental)->DenseRange(7, 10);

static void BM_CountReference(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_sequence_reference(forbidden_patterns(), n));
}
BENCHMARK(BM_CountReference)->DenseRange(7, 9);

namespace {
std::vector<SymmetryClass> first_classes(std::size_t k) {
  auto all = enumerate_quadruple_classes();
  if (all.size() > k) all.erase(all.begin() + static_cast<long>(k), all.end());
  return all;
}
}  // namespace

static void BM_ScanSerial(benchmark::State& state) {
  const auto classes = first_classes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate_classes_serial(classes, 8, central_binomial_target()));
}
BENCHMARK(BM_ScanSerial)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_ScanParallel(benchmark::State& state) {
  const auto classes = first_classes(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state)
    benchmark::DoNotOptimize(evaluate_classes_parallel(classes, 8, central_binomial_target()));
}
BENCHMARK(BM_ScanParallel)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

static void BM_QuadrupleCensus(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_quadruple_classes());
}
BENCHMARK(BM_QuadrupleCensus)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
