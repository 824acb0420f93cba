#include <benchmark/benchmark.h>

#include "partcount/carlitz.hpp"
#include "partcount/partition_tables.hpp"
#include "partcount/series.hpp"

namespace {

using namespace partcount;

void BM_product_family_naturals(benchmark::State& state) {
  const PartSet s = PartSet::naturals();
  const long long trunc = state.range(0);
  for (auto _ : state)
    benchmark::DoNotOptimize(product_family(s, trunc, ProductMode::InvMinus));
}
BENCHMARK(BM_product_family_naturals)->Arg(250)->Arg(500)->Arg(1000);

void BM_series_mul(benchmark::State& state) {
  const PartSet s = PartSet::naturals();
  const long long trunc = state.range(0);
  const Series a = product_family(s, trunc, ProductMode::InvMinus);
  const Series b = lambert_sum(s, trunc, LambertWeight::Count,
                               LambertSign::MinusDenominator);
  for (auto _ : state) benchmark::DoNotOptimize(series_mul(a, b));
}
BENCHMARK(BM_series_mul)->Arg(250)->Arg(500);

void BM_series_invert(benchmark::State& state) {
  const PartSet s = PartSet::naturals();
  const long long trunc = state.range(0);
  const Series denom =
      series_sub(Series::one(trunc),
                 lambert_sum(s, trunc, LambertWeight::Count,
                             LambertSign::PlusDenominator));
  for (auto _ : state) benchmark::DoNotOptimize(series_invert(denom));
}
BENCHMARK(BM_series_invert)->Arg(250)->Arg(500);

void BM_np_gf_pipeline(benchmark::State& state) {
  const PartSet s = PartSet::naturals();
  const long long n_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(np_table_gf(s, n_max));
}
BENCHMARK(BM_np_gf_pipeline)->Arg(250)->Arg(500);

void BM_np_conv_pipeline(benchmark::State& state) {
  const PartSet s = PartSet::naturals();
  const long long n_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(np_table_conv(s, n_max));
}
BENCHMARK(BM_np_conv_pipeline)->Arg(250)->Arg(500);

void BM_carlitz_gf(benchmark::State& state) {
  const PartSet s = PartSet::naturals();
  const long long n_max = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(carlitz_table_gf(s, n_max));
}
BENCHMARK(BM_carlitz_gf)->Arg(250)->Arg(500);

}  // namespace

BENCHMARK_MAIN();
