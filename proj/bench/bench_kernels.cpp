#include <benchmark/benchmark.h>

#include <random>

#include "gmdual/linalg.hpp"
#include "gmdual/local_cohomology.hpp"
#include "gmdual/ring.hpp"

using namespace gmdual;

namespace {

std::vector<SparseVec> random_rows(int n, int density_pct) {
  std::mt19937 gen(12345);
  std::uniform_int_distribution<int> pct(0, 99), val(-9, 9);
  std::vector<SparseVec> rows(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (pct(gen) < density_pct) {
        int v = val(gen);
        if (v != 0) rows[static_cast<std::size_t>(i)].emplace_back(j, Scalar(v));
      }
  return rows;
}

void BM_RankSerial(benchmark::State& st) {
  auto rows = random_rows(static_cast<int>(st.range(0)), 20);
  for (auto _ : st) benchmark::DoNotOptimize(rank_serial(rows));
}

void BM_RankParallel(benchmark::State& st) {
  auto rows = random_rows(static_cast<int>(st.range(0)), 20);
  for (auto _ : st) benchmark::DoNotOptimize(rank_parallel(rows));
}

PresentedModule cone_ring() {
  RingPtr p = GradedRing::create({"x", "y", "z"}, {1, 1, 1});
  Poly x = p->variable_poly(0), y = p->variable_poly(1), z = p->variable_poly(2);
  return PresentedModule::free(GradedRing::create({"x", "y", "z"}, {1, 1, 1}, {x * y - z * z}), {0});
}

void BM_LocalCohomology(benchmark::State& st, Execution mode) {
  PresentedModule a = cone_ring();
  const Window w(-static_cast<int>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(local_cohomology(a, 2, w, 40, mode).table());
}

void BM_Cech(benchmark::State& st, Execution mode) {
  PresentedModule a = cone_ring();
  const Window w(-static_cast<int>(st.range(0)), 2);
  for (auto _ : st) benchmark::DoNotOptimize(cech_local_cohomology(a, 2, w, 40, mode));
}

}  // namespace

BENCHMARK(BM_RankSerial)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankParallel)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LocalCohomology, serial, Execution::Serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_LocalCohomology, parallel, Execution::Parallel)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cech, serial, Execution::Serial)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_Cech, parallel, Execution::Parallel)->Arg(8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
