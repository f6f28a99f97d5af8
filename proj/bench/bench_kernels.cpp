#include <benchmark/benchmark.h>

#include "nomaps/bipartite.hpp"
#include "nomaps/bkp.hpp"
#include "nomaps/maps.hpp"
#include "nomaps/oracle.hpp"
#include "nomaps/tseries.hpp"

using namespace nomaps;

namespace {

Exec exec_of(const benchmark::State& s) { return s.range(0) == 0 ? Exec::serial : Exec::parallel; }

void label(benchmark::State& s) { s.SetLabel(s.range(0) == 0 ? "serial" : "openmp"); }

const TSeries& theta() {
  static const TSeries t = maps_theta(build_maps_table(MapsEngine::cc, 10, 10), 10);
  return t;
}

void BM_SeriesProduct(benchmark::State& s) {
  const TSeries& a = theta();
  for (auto _ : s) benchmark::DoNotOptimize(mul(a, a, exec_of(s)));
  label(s);
}

void BM_MapsTable(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(build_maps_table(MapsEngine::cc, 14, 14, exec_of(s)));
  label(s);
}

void BM_BipartiteTable(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(build_bip_table(10, 10, exec_of(s)));
  label(s);
}

void BM_Oracle(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(oracle_count(3, OracleFilter::none, exec_of(s)));
  label(s);
}

}  // namespace

BENCHMARK(BM_SeriesProduct)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MapsTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BipartiteTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Oracle)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
