#pragma once

// Parameter sweep looking for instances in which no full solution has a
// connected color hypergraph.

#include <cstdint>
#include <string>
#include <vector>

#include "sperner/coloring.hpp"
#include "sperner/solver.hpp"

namespace sperner {

/// How the colorings of one sweep instance are drawn.
///   random   - uniformly random Sperner colorings
///   ranked   - random preference prefix plus random tiebreak
///   longest  - longest interval with a random tiebreak
///   mixed    - each coloring independently one of the three above
///   example3 - the three example-3 colorings (n = 4, m = (1,1,1) only)
///   example4 - the three example-4 colorings (n = 4, m = (1,1,1) only)
enum class SweepFamily { random, ranked, longest, mixed, example3, example4 };

std::string to_string(SweepFamily f);
/// Throws std::invalid_argument for unknown names.
SweepFamily parse_family(const std::string& name);

struct SweepGrid {
  int n_min = 2, n_max = 4;
  int r_min = 1, r_max = 5;
  int colorings_min = 1, colorings_max = 3;
  std::vector<SweepFamily> families{SweepFamily::random};
  int seeds = 10;
  std::uint64_t base_seed = 0;
};

struct SweepInstance {
  std::size_t index = 0;
  int n = 0;
  int r = 0;
  SizeVector m;
  SweepFamily family = SweepFamily::random;
  std::uint64_t seed = 0;
};

/// Every instance of the grid in canonical order: n, r, coloring count, size
/// vector (lexicographic), family, seed index. Example families only appear
/// at n = 4 with m = (1,1,1).
std::vector<SweepInstance> enumerate_instances(const SweepGrid& grid);

/// The coloring specs an instance draws from its seed.
std::vector<ColoringSpec> instance_specs(const SweepInstance& inst);

struct SweepRecord {
  SweepInstance instance;
  std::vector<ColoringSpec> specs;
  std::size_t size_solutions = 0;  ///< size-solution facets
  std::size_t full_solutions = 0;  ///< full-solution facets
  bool connected_exists = false;
  bool candidate = false;
};

/// Solves one instance. Propagates NoSolution.
SweepRecord evaluate_instance(const SweepInstance& inst, unsigned jobs = 1);

}  // namespace sperner
