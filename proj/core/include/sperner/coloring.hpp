#pragma once

// Rating schemes: rules that pick a best nonempty interval of each partition.
// A scheme applied to every vertex of K_{n,r} is a Sperner coloring of the
// subdivision map f_{n,r}.

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "sperner/color_set.hpp"
#include "sperner/partition_complex.hpp"
#include "sperner/simplicial.hpp"

namespace sperner {

/// A permutation of [1, n]; earlier labels win ties.
using Tiebreak = std::vector<Color>;

Tiebreak ascending_tiebreak(int n);
/// Throws std::invalid_argument if `t` is not a permutation of [1, n].
void check_tiebreak(const Tiebreak& t, int n);

/// Prefer `ranks` in order; if all of them are empty, the first nonempty
/// interval in tiebreak order.
struct RankedScheme {
  std::vector<Color> ranks;
  Tiebreak tiebreak;
};

/// Prefer the longest interval; equal lengths go to the earlier tiebreak entry.
struct LongestScheme {
  Tiebreak tiebreak;
};

using RatingScheme = std::variant<RankedScheme, LongestScheme>;

/// Interval count the scheme was built for.
int scheme_width(const RatingScheme& s);

/// Best interval of p under s. Always a nonempty interval of p (r >= 1).
Color color_vertex(const RatingScheme& s, const Partition& p);

/// Longest interval wins.
RatingScheme scheme_example2(Tiebreak tiebreak);
/// c_i prefers interval i, then interval 4. Requires n = 4, i in [1, 3].
RatingScheme scheme_example3(int i, Tiebreak tiebreak);
/// c1: interval 1 then 3; c2: interval 2 then 4; c3: longest.
enum class Example4 { c1, c2, c3 };
RatingScheme scheme_example4(Example4 which, Tiebreak tiebreak);

/// Interval label per vertex id of a PartitionComplex.
struct VertexColoring {
  std::vector<Color> labels;

  Color operator[](VertexId v) const { return labels.at(v); }
  bool operator==(const VertexColoring&) const = default;
};

VertexColoring apply_scheme(const RatingScheme& s, const PartitionComplex& k);

/// Each vertex gets a uniformly chosen nonempty-interval label.
VertexColoring random_sperner_coloring(const PartitionComplex& k, std::uint64_t seed);

/// The coloring as a vertex map K_{n,r} -> P[1,n].
VertexMap as_vertex_map(const PartitionComplex& k, const VertexColoring& c);

/// A uniformly random Sperner coloring drawn from `seed`.
struct RandomColoring {
  std::uint64_t seed = 0;
};

/// Anything that yields a coloring of K_{n,r}.
using ColoringSpec = std::variant<RankedScheme, LongestScheme, RandomColoring>;

VertexColoring realize_coloring(const ColoringSpec& spec, const PartitionComplex& k);

inline ColoringSpec as_spec(const RatingScheme& s) {
  return std::visit([](const auto& v) -> ColoringSpec { return v; }, s);
}

/// Sperner check against f_{n,r} through simplicial-core.
bool is_sperner_coloring(const PartitionComplex& k, const VertexColoring& c);

}  // namespace sperner
