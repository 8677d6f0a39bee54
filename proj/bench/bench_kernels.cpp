#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "appell/appell.hpp"
#include "appell/attractor.hpp"
#include "appell/rootfind.hpp"
#include "appell/validate.hpp"

using namespace appell;

namespace {

struct SweepFixture {
  BigPoly q;
  std::vector<mp::Complex> z;
  std::vector<char> active;
  explicit SweepFixture(int n)
      : q(scaled_poly(appell_poly(GeneratingFunction::catalog(CatalogName::one_minus_t), n, default_precision(n)), n)),
        z(initial_guesses(q, default_precision(n))),
        active(z.size(), 1) {}
};

void aberth_sweep_bench(benchmark::State& state, Exec exec) {
  SweepFixture f(static_cast<int>(state.range(0)));
  std::vector<AberthCorrection> out;
  for (auto _ : state) {
    aberth_sweep(f.q, f.z, f.active, out, exec);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_AberthSweepSerial(benchmark::State& state) { aberth_sweep_bench(state, Exec::serial); }
void BM_AberthSweepParallel(benchmark::State& state) { aberth_sweep_bench(state, Exec::parallel); }

void hausdorff_bench(benchmark::State& state, Exec exec) {
  const int n = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::normal_distribution<double> N(0, 0.01);
  const auto curve = szego_samples(1.0, 4 * n).samples;
  std::vector<cplx> pts;
  for (int i = 0; i < n; ++i) pts.push_back(curve[static_cast<std::size_t>(4 * i)] + cplx(N(rng), N(rng)));
  for (auto _ : state) benchmark::DoNotOptimize(hausdorff(pts, curve, exec));
}

void BM_HausdorffSerial(benchmark::State& state) { hausdorff_bench(state, Exec::serial); }
void BM_HausdorffParallel(benchmark::State& state) { hausdorff_bench(state, Exec::parallel); }

}  // namespace

BENCHMARK(BM_AberthSweepSerial)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AberthSweepParallel)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HausdorffSerial)->Arg(400)->Arg(4000)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_HausdorffParallel)->Arg(400)->Arg(4000)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
