#pragma once

// Solution search for the multicolored Sperner statement: given colorings
// c_1..c_k of K_{n,r} and sizes m_1..m_k with sum n-1, find faces A with
// |c_i(A)| > m_i for all i (size-solutions), optionally also covering every
// color (full solutions), and study their color hypergraphs {c_i(A)}.

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sperner/coloring.hpp"
#include "sperner/color_set.hpp"
#include "sperner/partition_complex.hpp"

namespace sperner {

struct SizeVector {
  std::vector<int> m;

  int total() const;
  std::size_t size() const { return m.size(); }
  int operator[](std::size_t i) const { return m.at(i); }
  /// sum m_i = |N| - 1, the case the theorem covers.
  bool theorem_sized(int color_count) const { return total() == color_count - 1; }
};

/// All weak compositions of `total` into `parts` parts, lexicographic.
std::vector<SizeVector> compositions(int total, int parts);

struct ColorHypergraph {
  int color_count = 0;  ///< N = [1, color_count]
  std::vector<ColorSet> edges;
};

enum class TreeShape { star, path, other_tree, not_a_tree, not_applicable };
std::string to_string(TreeShape s);

ColorSet color_set(const VertexColoring& c, const Face& face);

bool is_size_solution(const Face& face, std::span<const VertexColoring> colorings,
                      const SizeVector& m);
bool is_full_solution(const Face& face, std::span<const VertexColoring> colorings,
                      const SizeVector& m, int color_count);

ColorHypergraph hypergraph_of(const Face& face, std::span<const VertexColoring> colorings,
                              int color_count);

/// Incidence-graph connectivity with every color of N covered.
bool is_connected(const ColorHypergraph& h);
bool has_isolated_colors(const ColorHypergraph& h);
/// Classifies graphs (all edges of size 2). A tree with a vertex adjacent to
/// all others is a star once |N| >= 4; smaller trees are paths.
TreeShape tree_shape(const ColorHypergraph& h);

struct SolutionReport {
  Face face;
  std::vector<ColorSet> color_sets;
  bool size_solution = false;
  bool full_solution = false;
  ColorHypergraph hypergraph;
  bool connected = false;
  bool minimal = false;
  TreeShape shape = TreeShape::not_applicable;
};

/// Recomputes every flag of a report from the face and colorings.
SolutionReport make_report(const Face& face, std::span<const VertexColoring> colorings,
                           const SizeVector& m, int color_count);

struct SolveOptions {
  unsigned jobs = 1;
  /// Enumerate every solution face and every minimal solution face instead
  /// of one greedy minimal face per solution facet.
  bool exhaustive = false;
};

struct SolveResult {
  /// Facets that are size-solutions, canonical face order.
  std::vector<SolutionReport> facets;
  /// Minimal solution faces, deduplicated, canonical face order. Faces from
  /// full-solution facets are minimized against the full predicate.
  std::vector<SolutionReport> minimal;
  /// Exhaustive mode only: every size-solution face.
  std::vector<SolutionReport> all;

  std::size_t full_facet_count() const;
  bool connected_full_exists() const;
};

/// Raised when a theorem-sized instance has no size-solution facet. That
/// would contradict the theorem; the instance data travels with the error.
struct NoSolution : std::runtime_error {
  NoSolution(int n, int r, SizeVector m, std::vector<VertexColoring> colorings);
  int n;
  int r;
  SizeVector m;
  std::vector<VertexColoring> colorings;
};

/// Scans the facets, then shrinks each solution facet to a minimal solution
/// by greedy vertex deletion (lowest vertex id first).
SolveResult find_solutions(const PartitionComplex& k, std::span<const VertexColoring> colorings,
                           const SizeVector& m, const SolveOptions& options = {});

/// Greedy deletion against the size predicate or, with `full`, the full one.
Face minimize_solution(const Face& face, std::span<const VertexColoring> colorings,
                       const SizeVector& m, int color_count, bool full);

}  // namespace sperner
