#include <benchmark/benchmark.h>

#include "polyorder/casestudy.hpp"
#include "polyorder/classify.hpp"
#include "polyorder/dynamics.hpp"
#include "polyorder/popgame.hpp"
#include "polyorder/registry.hpp"

using namespace polyorder;

namespace {

void BM_CompareVector(benchmark::State& state) {
  const FieldBundle fb = make_builtin("mexican_hat");
  ToleranceConfig cfg;
  cfg.n_eps = static_cast<std::size_t>(state.range(0));
  const Point x{0.3, -0.4};
  const Point y{1.2, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(compare_vector(fb.vector, x, y, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CompareVector)->Arg(257)->Arg(1025)->Arg(4097);

void BM_CompareScalar(benchmark::State& state) {
  const FieldBundle fb = make_builtin("mexican_hat");
  const ToleranceConfig cfg;
  const Point x{0.3, -0.4};
  const Point y{1.2, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(compare_scalar(fb.scalar, x, y, cfg));
}
BENCHMARK(BM_CompareScalar);

void BM_IsMinimalHawkDove(benchmark::State& state) {
  const PopulationGame g = hawk_dove();
  const SampleSet ch = default_game_challengers(g, 42, static_cast<std::size_t>(state.range(0)));
  const ToleranceConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal(g.cost, Point{0.5, 0.5}, ch, cfg));
}
BENCHMARK(BM_IsMinimalHawkDove)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_IsMinimalXsininv(benchmark::State& state) {
  const FieldBundle fb = xsininv_field();
  const SampleSet ch = sample_domain(fb.vector.domain, GridStrategy{static_cast<std::size_t>(state.range(0))});
  const ToleranceConfig cfg;
  const Point p{1.0 / (3.0 * 3.141592653589793)};
  for (auto _ : state) benchmark::DoNotOptimize(is_minimal(fb.vector, p, ch, cfg, origin_segment_witnesses()));
}
BENCHMARK(BM_IsMinimalXsininv)->Arg(512)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_Integrate(benchmark::State& state) {
  const FieldBundle fb = resolve_field("neg:xsininv");
  IntegratorConfig cfg;
  cfg.t_max = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate(fb.vector, Point{0.5}, cfg));
}
BENCHMARK(BM_Integrate)->Arg(10)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
