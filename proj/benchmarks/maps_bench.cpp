#include <benchmark/benchmark.h>

#include "sperner/coloring.hpp"
#include "sperner/sampling.hpp"
#include "sperner/topology.hpp"

namespace {

using namespace sperner;

void roundtrip(benchmark::State& state) {
  const auto colors = static_cast<std::size_t>(state.range(0));
  SplitMix64 rng(1);
  const auto m = random_size_vector(rng, static_cast<int>(colors) - 1, 3);
  std::vector<NonnegGrid> ys;
  for (int i = 0; i < 256; ++i) ys.push_back(sample_Y(rng, colors, m));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(roundtrip_check(ys[i++ % ys.size()], m));
}
BENCHMARK(roundtrip)->Arg(3)->Arg(6)->Arg(12);

void winding(benchmark::State& state) {
  const auto k = PartitionComplex::build(3, static_cast<int>(state.range(0)));
  const std::vector<VertexColoring> cs{apply_scheme(scheme_example2(ascending_tiebreak(3)), k)};
  for (auto _ : state) benchmark::DoNotOptimize(boundary_winding(k, cs, SizeVector{{2}}));
}
BENCHMARK(winding)->Arg(4)->Arg(16)->Arg(64)->Unit(benchmark::kMicrosecond);

}  // namespace
