#include "sperner/sweep.hpp"

#include <stdexcept>

#include "sperner/random.hpp"

namespace sperner {

std::string to_string(SweepFamily f) {
  switch (f) {
    case SweepFamily::random:
      return "random";
    case SweepFamily::ranked:
      return "ranked";
    case SweepFamily::longest:
      return "longest";
    case SweepFamily::mixed:
      return "mixed";
    case SweepFamily::example3:
      return "example3";
    case SweepFamily::example4:
      break;
  }
  return "example4";
}

SweepFamily parse_family(const std::string& name) {
  for (auto f : {SweepFamily::random, SweepFamily::ranked, SweepFamily::longest,
                 SweepFamily::mixed, SweepFamily::example3, SweepFamily::example4}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown sweep family '" + name + "'");
}

namespace {

bool is_example_family(SweepFamily f) {
  return f == SweepFamily::example3 || f == SweepFamily::example4;
}

ColoringSpec draw_spec(SweepFamily family, int n, SplitMix64& rng) {
  switch (family) {
    case SweepFamily::random:
      return RandomColoring{rng()};
    case SweepFamily::ranked: {
      auto order = random_permutation(rng, n);
      order.resize(static_cast<std::size_t>(rng.between(1, n)));
      return RankedScheme{std::move(order), random_permutation(rng, n)};
    }
    case SweepFamily::longest:
      return LongestScheme{random_permutation(rng, n)};
    case SweepFamily::mixed: {
      static constexpr SweepFamily kinds[] = {SweepFamily::random, SweepFamily::ranked,
                                              SweepFamily::longest};
      return draw_spec(kinds[rng.below(3)], n, rng);
    }
    case SweepFamily::example3:
    case SweepFamily::example4:
      break;
  }
  throw std::logic_error("example families are drawn as a group");
}

}  // namespace

std::vector<SweepInstance> enumerate_instances(const SweepGrid& grid) {
  if (grid.n_min < 2 || grid.n_min > grid.n_max) throw std::invalid_argument("bad n range");
  if (grid.r_min < 1 || grid.r_min > grid.r_max) throw std::invalid_argument("bad r range");
  if (grid.colorings_min < 1 || grid.colorings_min > grid.colorings_max) {
    throw std::invalid_argument("bad coloring-count range");
  }
  if (grid.seeds < 0) throw std::invalid_argument("bad seed count");
  std::vector<SweepInstance> out;
  const SizeVector example_m{{1, 1, 1}};
  for (int n = grid.n_min; n <= grid.n_max; ++n) {
    for (int r = grid.r_min; r <= grid.r_max; ++r) {
      for (int k = grid.colorings_min; k <= grid.colorings_max; ++k) {
        for (const auto& m : compositions(n - 1, k)) {
          for (auto family : grid.families) {
            if (is_example_family(family) && (n != 4 || m.m != example_m.m)) continue;
            for (int s = 0; s < grid.seeds; ++s) {
              SweepInstance inst;
              inst.index = out.size();
              inst.n = n;
              inst.r = r;
              inst.m = m;
              inst.family = family;
              inst.seed = derive_seed(grid.base_seed, static_cast<std::uint64_t>(s));
              out.push_back(std::move(inst));
            }
          }
        }
      }
    }
  }
  return out;
}

std::vector<ColoringSpec> instance_specs(const SweepInstance& inst) {
  SplitMix64 rng(inst.seed);
  std::vector<ColoringSpec> specs;
  if (is_example_family(inst.family)) {
    const auto tiebreak = random_permutation(rng, 4);
    for (int i = 1; i <= 3; ++i) {
      const RatingScheme s = inst.family == SweepFamily::example3
                                 ? scheme_example3(i, tiebreak)
                                 : scheme_example4(static_cast<Example4>(i - 1), tiebreak);
      specs.push_back(std::visit([](const auto& v) -> ColoringSpec { return v; }, s));
    }
    return specs;
  }
  for (std::size_t i = 0; i < inst.m.size(); ++i) {
    specs.push_back(draw_spec(inst.family, inst.n, rng));
  }
  return specs;
}

SweepRecord evaluate_instance(const SweepInstance& inst, unsigned jobs) {
  const auto k = PartitionComplex::build(inst.n, inst.r);
  SweepRecord rec;
  rec.instance = inst;
  rec.specs = instance_specs(inst);
  std::vector<VertexColoring> colorings;
  colorings.reserve(rec.specs.size());
  for (const auto& s : rec.specs) colorings.push_back(realize_coloring(s, k));

  SolveOptions opts;
  opts.jobs = jobs;
  const auto result = find_solutions(k, colorings, inst.m, opts);
  rec.size_solutions = result.facets.size();
  rec.full_solutions = result.full_facet_count();
  rec.connected_exists = result.connected_full_exists();
  rec.candidate = !rec.connected_exists;
  return rec;
}

}  // namespace sperner
