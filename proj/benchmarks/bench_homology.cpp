#include <benchmark/benchmark.h>

#include "topohelly/generators.hpp"
#include "topohelly/homology.hpp"
#include "topohelly/nerve.hpp"
#include "topohelly/smith.hpp"

using namespace topohelly;

namespace {

void BM_SmithGridBoundary(benchmark::State& state) {
  const int g = static_cast<int>(state.range(0));
  const CubicalComplex grid = full_grid({g, g});
  const ChainComplex c = chain_complex(grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smith_normal_form(c.boundary[2]).rank());
  }
}
BENCHMARK(BM_SmithGridBoundary)->Arg(4)->Arg(8)->Arg(12);

void BM_ReducedHomologyAnnulus(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const CubicalComplex ring =
      discretize_annulus({r + 1, r + 1}, 1, r, {2 * r + 2, 2 * r + 2});
  const ChainComplex c = chain_complex(ring);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        reduced_homology(c, {.check_boundary = false}).betti_at(1));
  }
}
BENCHMARK(BM_ReducedHomologyAnnulus)->Arg(3)->Arg(5)->Arg(7);

void BM_LerayNumberBoxNerve(benchmark::State& state) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::boxes;
  spec.extent = {8, 8};
  spec.n = static_cast<int>(state.range(0));
  spec.seed = 17;
  spec.box_min = 2;
  spec.box_max = 4;
  const auto f = std::get<CubicalFamily>(generate(spec));
  const NerveComplex n = nerve(f);
  for (auto _ : state) {
    benchmark::DoNotOptimize(leray_number(n.complex).leray);
  }
}
BENCHMARK(BM_LerayNumberBoxNerve)->Arg(6)->Arg(8)->Arg(10);

}  // namespace
