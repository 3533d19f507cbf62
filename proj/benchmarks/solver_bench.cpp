#include <benchmark/benchmark.h>

#include "sperner/coloring.hpp"
#include "sperner/solver.hpp"

namespace {

using namespace sperner;

void solve_example3(benchmark::State& state) {
  const auto k = PartitionComplex::build(4, static_cast<int>(state.range(0)));
  std::vector<VertexColoring> cs;
  for (int i = 1; i <= 3; ++i) cs.push_back(apply_scheme(scheme_example3(i, ascending_tiebreak(4)), k));
  SolveOptions opts;
  opts.exhaustive = state.range(1) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_solutions(k, cs, SizeVector{{1, 1, 1}}, opts));
}
BENCHMARK(solve_example3)->ArgsProduct({{5, 9}, {0, 1}})->Unit(benchmark::kMillisecond);

void solve_random(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto k = PartitionComplex::build(n, static_cast<int>(state.range(1)));
  std::vector<VertexColoring> cs;
  for (int i = 0; i < n - 1; ++i) cs.push_back(random_sperner_coloring(k, static_cast<std::uint64_t>(i)));
  const SizeVector m{std::vector<int>(static_cast<std::size_t>(n - 1), 1)};
  SolveOptions opts;
  opts.jobs = static_cast<unsigned>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(find_solutions(k, cs, m, opts));
}
BENCHMARK(solve_random)->Args({4, 10, 1})->Args({4, 10, 4})->Args({5, 6, 1})->Unit(benchmark::kMillisecond);

}  // namespace
