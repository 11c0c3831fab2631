#include <benchmark/benchmark.h>

#include "topohelly/generators.hpp"
#include "topohelly/spectral.hpp"

using namespace topohelly;

namespace {

CubicalFamily ring_chain(int n) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::annuli;
  spec.extent = {12, 12};
  spec.n = n;
  spec.seed = 23;
  spec.annulus_max_outer = 3;
  return std::get<CubicalFamily>(generate(spec));
}

void BM_MayerVietorisBuild(benchmark::State& state) {
  const CubicalFamily f = ring_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        mayer_vietoris_double_complex(f).total_rank());
  }
}
BENCHMARK(BM_MayerVietorisBuild)->Arg(2)->Arg(3)->Arg(4);

void BM_SecondPageDims(benchmark::State& state) {
  const CubicalFamily f = ring_chain(static_cast<int>(state.range(0)));
  const DoubleComplex dc = mayer_vietoris_double_complex(f);
  for (auto _ : state) {
    SpectralSequence seq(dc, Filtration::second, 0);
    benchmark::DoNotOptimize(seq.page(2, false).dims);
  }
}
BENCHMARK(BM_SecondPageDims)->Arg(2)->Arg(3);

void BM_ConvergenceCheck(benchmark::State& state) {
  const CubicalFamily f = ring_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(convergence_check(f, 3, 0).convergence_ok);
  }
}
BENCHMARK(BM_ConvergenceCheck)->Arg(2)->Arg(3);

}  // namespace
