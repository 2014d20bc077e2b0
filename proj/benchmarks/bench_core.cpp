#include "advect/advection_lab.hpp"
#include "advect/fourier.hpp"
#include "advect/modified_equation.hpp"
#include "advect/schemes.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace advect;

const SchemeId& scheme_at(int index) { return all_schemes().at(static_cast<std::size_t>(index)); }

void BM_BuildRule(benchmark::State& state) {
  const SchemeId& id = scheme_at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(build_rule(id));
  state.SetLabel(id.label());
}
BENCHMARK(BM_BuildRule)->DenseRange(0, 7);

void BM_SpectralRadius(benchmark::State& state) {
  const TwoMomentRule rule = build_rule(schemes_id::dg_rk2);
  const int n_theta = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(spectral_radius(rule, 0.3, n_theta));
  state.SetItemsProcessed(state.iterations() * n_theta);
}
BENCHMARK(BM_SpectralRadius)->RangeMultiplier(4)->Range(256, 16384);

void BM_CflLimit(benchmark::State& state) {
  const SchemeId& id = scheme_at(static_cast<int>(state.range(0)));
  const TwoMomentRule rule = build_rule(id);
  for (auto _ : state) benchmark::DoNotOptimize(cfl_limit(rule));
  state.SetLabel(id.label());
}
BENCHMARK(BM_CflLimit)->DenseRange(0, 7)->Unit(benchmark::kMillisecond);

void BM_ApplyRule(benchmark::State& state) {
  const int n_cells = static_cast<int>(state.range(0));
  const NumericRule rule = build_rule(schemes_id::cgks_s2o4).at(0.4);
  TwoMomentField field = init_field(Profile::sine, n_cells);
  for (auto _ : state) {
    field = apply_rule(rule, field);
    benchmark::DoNotOptimize(field);
  }
  state.SetItemsProcessed(state.iterations() * n_cells);
}
BENCHMARK(BM_ApplyRule)->RangeMultiplier(4)->Range(64, 16384);

void BM_GrpStep(benchmark::State& state) {
  const int n_cells = static_cast<int>(state.range(0));
  TwoMomentField field = init_field(Profile::sine, n_cells);
  for (auto _ : state) {
    field = grp_step(field, 0.5);
    benchmark::DoNotOptimize(field);
  }
  state.SetItemsProcessed(state.iterations() * n_cells);
}
BENCHMARK(BM_GrpStep)->RangeMultiplier(4)->Range(64, 16384);

void BM_MarchOnePeriod(benchmark::State& state) {
  RunConfig config;
  config.scheme_id = schemes_id::cgks_s1o2;
  config.n_cells = static_cast<int>(state.range(0));
  config.cfl = 0.5;
  for (auto _ : state) benchmark::DoNotOptimize(march(config));
}
BENCHMARK(BM_MarchOnePeriod)->RangeMultiplier(2)->Range(80, 1280)->Unit(benchmark::kMillisecond);

void BM_ExpandSymbol(benchmark::State& state) {
  const TwoMomentRule rule = build_rule(schemes_id::fr_g2);
  for (auto _ : state) benchmark::DoNotOptimize(expand_symbol(rule, 0.5));
}
BENCHMARK(BM_ExpandSymbol);

void BM_BuildS2O4Rule(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_s2o4_rule());
}
BENCHMARK(BM_BuildS2O4Rule);

}  // namespace

BENCHMARK_MAIN();
