#include <benchmark/benchmark.h>

#include "pvi/identities.hpp"
#include "pvi/tau.hpp"

using namespace pvi;

static void BM_ExpandWedge(benchmark::State& state) {
  const auto w = FrameMatrix::vandermonde();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(expand_wedge({m, -m, 0}, w));
}
BENCHMARK(BM_ExpandWedge)->DenseRange(1, 3);

static void BM_TauSectors(benchmark::State& state) {
  const auto w = FrameMatrix::vandermonde();
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(tau_sectors({m, -m, 0}, w));
}
BENCHMARK(BM_TauSectors)->DenseRange(1, 3);

static void BM_GenerateBall(benchmark::State& state) {
  const auto w = FrameMatrix::vandermonde();
  for (auto _ : state) benchmark::DoNotOptimize(generate_ball(w, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_GenerateBall)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

static void BM_JmoResidual(benchmark::State& state) {
  TauGenerator gen(FrameMatrix::vandermonde());
  std::vector<SigmaFn> sigmas;
  for (const auto& p : ball(2)) {
    const LaurentPoly& T = gen.at(p);
    if (!T.is_zero()) sigmas.push_back(sigma_of({p, T, r_weight_int(p)}));
  }
  for (auto _ : state)
    for (const auto& s : sigmas) benchmark::DoNotOptimize(jmo_residual(s));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(sigmas.size()));
}
BENCHMARK(BM_JmoResidual)->Unit(benchmark::kMillisecond);

static void BM_BilinearSweep(benchmark::State& state) {
  TauGenerator gen(FrameMatrix::vandermonde());
  const auto dom = ball(2);
  const EpsTable eps = calibrate_eps(gen, dom);
  for (auto _ : state) {
    Report rep;
    check_bilinear(gen, dom, eps, rep);
    benchmark::DoNotOptimize(rep.records.size());
  }
}
BENCHMARK(BM_BilinearSweep)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
