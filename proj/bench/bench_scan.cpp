// Serial vs OpenMP stability kernels on growing candidate boxes.

#include <benchmark/benchmark.h>

#include "ellfm/fourier_mukai.hpp"
#include "ellfm/geometry.hpp"
#include "ellfm/stability.hpp"

using namespace ellfm;

namespace {

const SurfaceGeometry kGeo(1, 3);
// Rank 6, fibre degree 0: every sub-rank 1..5 is scanned.
const ChernCharacter kSheaf = ChernCharacter::on_x(6, 0, -7, 2);

template <Execution exec>
void BM_Scan(benchmark::State& state) {
  const CandidateBox box = CandidateBox::symmetric(state.range(0), state.range(0));
  const Polarization pol(2, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(destabilizer_scan(kGeo, kSheaf, pol, box, exec));
  }
  const long side = 2 * state.range(0) + 1;
  state.SetItemsProcessed(state.iterations() * 5 * side * side);
}

template <Execution exec>
void BM_Threshold(benchmark::State& state) {
  const CandidateBox box = CandidateBox::symmetric(state.range(0), state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(threshold_b0(kGeo, kSheaf, 3, box, exec));
  }
  const long side = 2 * state.range(0) + 1;
  state.SetItemsProcessed(state.iterations() * 5 * side * side);
}

}  // namespace

BENCHMARK(BM_Scan<Execution::serial>)->Arg(10)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Scan<Execution::parallel>)->Arg(10)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Threshold<Execution::serial>)->Arg(10)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Threshold<Execution::parallel>)->Arg(10)->Arg(40)->Arg(120)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
