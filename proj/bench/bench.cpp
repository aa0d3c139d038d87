// Serial reference vs OpenMP kernels on the enumeration closure and the
// exhaustive trace/determinant sweep.

#include <benchmark/benchmark.h>

#include "logcy/enumeration.hpp"
#include "logcy/linalg.hpp"
#include "logcy/monodromy.hpp"
#include "logcy/sweep.hpp"

using namespace logcy;

namespace {

const EnumBounds kBounds{5, -6, 6, -2, 2, 0};

void BM_EnumerateSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_serial(kBounds).records.size());
}

void BM_EnumerateParallel(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_parallel(kBounds, workers).records.size());
}

struct Count {
  std::size_t singular = 0;
};

void visit(Count& c, const SphereCycle& cycle) {
  if (monodromy(cycle).trace() != 2 && determinant(intersection_matrix(cycle)) == 0) ++c.singular;
}

void merge(Count& a, const Count& b) { a.singular += b.singular; }

const SweepRange kRange{2, 5, -4, 4};

void BM_SweepSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sweep_reduce_serial(kRange, Count{}, visit, merge).singular);
}

void BM_SweepParallel(benchmark::State& state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(sweep_reduce_parallel(kRange, Count{}, visit, merge, workers).singular);
}

}  // namespace

BENCHMARK(BM_EnumerateSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SweepParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
