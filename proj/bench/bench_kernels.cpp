// Serial reference vs OpenMP paths of the parallel kernels.

#include <benchmark/benchmark.h>

#include "tropkit/enumeration.hpp"
#include "tropkit/metricgraph.hpp"

using namespace tropkit;

namespace {

// Complete graph on four vertices (genus 3) with distinct integer lengths.
MetricGraph k4() {
  return MetricGraph({"a", "b", "c", "d"}, {{0, 1, Rational(1)},
                                            {0, 2, Rational(2)},
                                            {0, 3, Rational(3)},
                                            {1, 2, Rational(2)},
                                            {1, 3, Rational(1)},
                                            {2, 3, Rational(3)}});
}

Divisor rank_divisor(long extra) {
  Divisor d;
  d.add(GraphPoint::vertex(0), 2 + extra);
  d.add(GraphPoint::vertex(1), 1);
  d.add(GraphPoint::on_edge(2, Rational(1, 2)), 1);
  return d;
}

void BM_rank(benchmark::State& state, Exec exec) {
  const auto g = k4();
  const auto d = rank_divisor(state.range(0));
  long r = 0;
  for (auto _ : state) benchmark::DoNotOptimize(r = rank(g, d, exec));
  state.counters["rank"] = static_cast<double>(r);
}

void BM_count(benchmark::State& state, Exec exec) {
  const int d = static_cast<int>(state.range(0));
  for (auto _ : state) {
    BigInt total = 0;
    for (int g = 0; g <= (d - 1) * (d - 2) / 2; ++g) total += count_curves(d, g, exec);
    benchmark::DoNotOptimize(total);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_rank, serial, Exec::serial)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_rank, parallel, Exec::parallel)->Arg(0)->Arg(2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_count, serial, Exec::serial)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_count, parallel, Exec::parallel)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
