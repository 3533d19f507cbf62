#include "sperner/coloring.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sperner/random.hpp"

namespace sperner {

Tiebreak ascending_tiebreak(int n) {
  Tiebreak t(static_cast<std::size_t>(n));
  std::iota(t.begin(), t.end(), 1);
  return t;
}

void check_tiebreak(const Tiebreak& t, int n) {
  Tiebreak sorted = t;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ascending_tiebreak(n)) {
    throw std::invalid_argument("tiebreak must be a permutation of [1," + std::to_string(n) + "]");
  }
}

int scheme_width(const RatingScheme& s) {
  return std::visit([](const auto& v) { return static_cast<int>(v.tiebreak.size()); }, s);
}

namespace {

Color first_nonempty(const Tiebreak& order, const Partition& p) {
  for (Color c : order) {
    if (!p.interval_empty(c)) return c;
  }
  throw std::invalid_argument("partition " + p.name() + " has no nonempty interval");
}

void check_width(const RatingScheme& s, const Partition& p) {
  if (scheme_width(s) != p.n()) {
    throw std::invalid_argument("scheme built for a different interval count");
  }
}

}  // namespace

Color color_vertex(const RatingScheme& s, const Partition& p) {
  check_width(s, p);
  if (const auto* ranked = std::get_if<RankedScheme>(&s)) {
    for (Color c : ranked->ranks) {
      if (!p.interval_empty(c)) return c;
    }
    return first_nonempty(ranked->tiebreak, p);
  }
  const auto& longest = std::get<LongestScheme>(s);
  Color best = first_nonempty(longest.tiebreak, p);
  for (Color c : longest.tiebreak) {
    if (p.length(c) > p.length(best)) best = c;
  }
  return best;
}

RatingScheme scheme_example2(Tiebreak tiebreak) {
  return LongestScheme{std::move(tiebreak)};
}

RatingScheme scheme_example3(int i, Tiebreak tiebreak) {
  if (i < 1 || i > 3) throw std::invalid_argument("example-3 colorings are c_1..c_3");
  check_tiebreak(tiebreak, 4);
  return RankedScheme{{i, 4}, std::move(tiebreak)};
}

RatingScheme scheme_example4(Example4 which, Tiebreak tiebreak) {
  check_tiebreak(tiebreak, 4);
  switch (which) {
    case Example4::c1:
      return RankedScheme{{1, 3}, std::move(tiebreak)};
    case Example4::c2:
      return RankedScheme{{2, 4}, std::move(tiebreak)};
    case Example4::c3:
      break;
  }
  return LongestScheme{std::move(tiebreak)};
}

VertexColoring apply_scheme(const RatingScheme& s, const PartitionComplex& k) {
  VertexColoring c;
  c.labels.reserve(k.partitions().size());
  for (const auto& p : k.partitions()) c.labels.push_back(color_vertex(s, p));
  return c;
}

VertexColoring random_sperner_coloring(const PartitionComplex& k, std::uint64_t seed) {
  SplitMix64 rng(seed);
  VertexColoring c;
  c.labels.reserve(k.partitions().size());
  for (const auto& p : k.partitions()) {
    const auto choices = p.nonempty_intervals().to_vector();
    c.labels.push_back(choices[rng.below(choices.size())]);
  }
  return c;
}

VertexColoring realize_coloring(const ColoringSpec& spec, const PartitionComplex& k) {
  if (const auto* rnd = std::get_if<RandomColoring>(&spec)) {
    return random_sperner_coloring(k, rnd->seed);
  }
  if (const auto* ranked = std::get_if<RankedScheme>(&spec)) return apply_scheme(*ranked, k);
  return apply_scheme(std::get<LongestScheme>(spec), k);
}

VertexMap as_vertex_map(const PartitionComplex& k, const VertexColoring& c) {
  std::vector<VertexId> assignment;
  assignment.reserve(c.labels.size());
  for (Color label : c.labels) {
    if (label < 1 || label > k.n()) throw std::invalid_argument("color label outside [1,n]");
    assignment.push_back(static_cast<VertexId>(label - 1));
  }
  return VertexMap(k.complex(), k.simplex_target(), std::move(assignment));
}

bool is_sperner_coloring(const PartitionComplex& k, const VertexColoring& c) {
  return is_sperner_coloring(as_vertex_map(k, c), k.subdivision_face_map());
}

}  // namespace sperner
