#include "sperner/solver.hpp"

#include <algorithm>
#include <numeric>

#include "sperner/parallel.hpp"

namespace sperner {

int SizeVector::total() const { return std::accumulate(m.begin(), m.end(), 0); }

std::vector<SizeVector> compositions(int total, int parts) {
  std::vector<SizeVector> out;
  if (parts <= 0 || total < 0) return out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  auto rec = [&](auto&& self, int i, int left) -> void {
    if (i == parts - 1) {
      cur[i] = left;
      out.push_back(SizeVector{cur});
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[i] = v;
      self(self, i + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return out;
}

std::string to_string(TreeShape s) {
  switch (s) {
    case TreeShape::star:
      return "star";
    case TreeShape::path:
      return "path";
    case TreeShape::other_tree:
      return "other";
    case TreeShape::not_a_tree:
      return "not-a-tree";
    case TreeShape::not_applicable:
      break;
  }
  return "not-applicable";
}

ColorSet color_set(const VertexColoring& c, const Face& face) {
  ColorSet s;
  for (VertexId v : face) s.insert(c[v]);
  return s;
}

namespace {

void check_arity(std::span<const VertexColoring> colorings, const SizeVector& m) {
  if (colorings.size() != m.size()) {
    throw std::invalid_argument("need one size m_i per coloring");
  }
}

bool full_check(const Face& face, std::span<const VertexColoring> colorings, const SizeVector& m,
                int color_count, bool full) {
  return full ? is_full_solution(face, colorings, m, color_count)
              : is_size_solution(face, colorings, m);
}

/// True if no one-vertex deletion keeps the predicate. Upward closure makes
/// this equivalent to minimality among all subfaces.
bool is_minimal(const Face& face, std::span<const VertexColoring> colorings, const SizeVector& m,
                int color_count, bool full) {
  for (std::size_t drop = 0; drop < face.size(); ++drop) {
    Face sub = face;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
    if (full_check(sub, colorings, m, color_count, full)) return false;
  }
  return true;
}

}  // namespace

bool is_size_solution(const Face& face, std::span<const VertexColoring> colorings,
                      const SizeVector& m) {
  check_arity(colorings, m);
  for (std::size_t i = 0; i < colorings.size(); ++i) {
    if (color_set(colorings[i], face).size() <= m[i]) return false;
  }
  return true;
}

bool is_full_solution(const Face& face, std::span<const VertexColoring> colorings,
                      const SizeVector& m, int color_count) {
  if (!is_size_solution(face, colorings, m)) return false;
  ColorSet all;
  for (const auto& c : colorings) all |= color_set(c, face);
  return all == ColorSet::range(1, color_count);
}

ColorHypergraph hypergraph_of(const Face& face, std::span<const VertexColoring> colorings,
                              int color_count) {
  ColorHypergraph h;
  h.color_count = color_count;
  for (const auto& c : colorings) h.edges.push_back(color_set(c, face));
  return h;
}

bool has_isolated_colors(const ColorHypergraph& h) {
  ColorSet covered;
  for (const auto& e : h.edges) covered |= e;
  return !ColorSet::range(1, h.color_count).is_subset_of(covered);
}

bool is_connected(const ColorHypergraph& h) {
  if (has_isolated_colors(h)) return false;
  if (h.edges.empty()) return h.color_count == 0;
  // Grow the component of edge 0 through shared colors.
  ColorSet reached = h.edges[0];
  std::vector<bool> used(h.edges.size(), false);
  used[0] = true;
  for (bool grew = true; grew;) {
    grew = false;
    for (std::size_t j = 0; j < h.edges.size(); ++j) {
      if (!used[j] && !(h.edges[j] & reached).empty()) {
        used[j] = true;
        reached |= h.edges[j];
        grew = true;
      }
    }
  }
  return std::all_of(used.begin(), used.end(), [](bool u) { return u; }) &&
         reached == ColorSet::range(1, h.color_count);
}

TreeShape tree_shape(const ColorHypergraph& h) {
  for (const auto& e : h.edges) {
    if (e.size() != 2) return TreeShape::not_applicable;
  }
  const int n = h.color_count;
  if (static_cast<int>(h.edges.size()) != n - 1 || !is_connected(h)) return TreeShape::not_a_tree;
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& e : h.edges) {
    for (Color c : e.to_vector()) ++degree[c];
  }
  const int max_degree = *std::max_element(degree.begin(), degree.end());
  if (n >= 4 && max_degree == n - 1) return TreeShape::star;
  if (max_degree <= 2) return TreeShape::path;
  return TreeShape::other_tree;
}

SolutionReport make_report(const Face& face, std::span<const VertexColoring> colorings,
                           const SizeVector& m, int color_count) {
  SolutionReport rep;
  rep.face = face;
  rep.hypergraph = hypergraph_of(face, colorings, color_count);
  rep.color_sets = rep.hypergraph.edges;
  rep.size_solution = is_size_solution(face, colorings, m);
  rep.full_solution = rep.size_solution && is_full_solution(face, colorings, m, color_count);
  rep.connected = is_connected(rep.hypergraph);
  rep.shape = tree_shape(rep.hypergraph);
  rep.minimal =
      rep.size_solution && is_minimal(face, colorings, m, color_count, rep.full_solution);
  return rep;
}

Face minimize_solution(const Face& face, std::span<const VertexColoring> colorings,
                       const SizeVector& m, int color_count, bool full) {
  Face cur = face;
  for (std::size_t i = 0; i < cur.size();) {
    Face sub = cur;
    sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(i));
    if (full_check(sub, colorings, m, color_count, full)) {
      cur = std::move(sub);
    } else {
      ++i;
    }
  }
  return cur;
}

std::size_t SolveResult::full_facet_count() const {
  return static_cast<std::size_t>(
      std::count_if(facets.begin(), facets.end(), [](const auto& r) { return r.full_solution; }));
}

bool SolveResult::connected_full_exists() const {
  // Hypergraph edges only grow with the face, so facets decide this.
  return std::any_of(facets.begin(), facets.end(),
                     [](const auto& r) { return r.full_solution && r.connected; });
}

namespace {
std::string no_solution_message(int n, int r, const SizeVector& m) {
  std::string s = "no size-solution facet in K_{" + std::to_string(n) + "," + std::to_string(r) +
                  "} for m = (";
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return s + ")";
}
}  // namespace

NoSolution::NoSolution(int n_, int r_, SizeVector m_, std::vector<VertexColoring> colorings_)
    : std::runtime_error(no_solution_message(n_, r_, m_)),
      n(n_),
      r(r_),
      m(std::move(m_)),
      colorings(std::move(colorings_)) {}

SolveResult find_solutions(const PartitionComplex& k, std::span<const VertexColoring> colorings,
                           const SizeVector& m, const SolveOptions& options) {
  check_arity(colorings, m);
  if (colorings.empty()) throw std::invalid_argument("need at least one coloring");
  for (const auto& c : colorings) {
    if (c.labels.size() != k.partitions().size()) {
      throw std::invalid_argument("coloring does not cover the complex");
    }
  }
  const int color_count = k.n();
  const auto& facets = k.facets();

  std::vector<std::optional<SolutionReport>> facet_slots(facets.size());
  std::vector<std::optional<Face>> minimal_slots(facets.size());
  parallel_for(facets.size(), options.jobs, [&](std::size_t j) {
    if (!is_size_solution(facets[j], colorings, m)) return;
    auto rep = make_report(facets[j], colorings, m, color_count);
    if (!options.exhaustive) {
      minimal_slots[j] =
          minimize_solution(facets[j], colorings, m, color_count, rep.full_solution);
    }
    facet_slots[j] = std::move(rep);
  });

  SolveResult result;
  for (auto& slot : facet_slots) {
    if (slot) result.facets.push_back(std::move(*slot));
  }
  std::sort(result.facets.begin(), result.facets.end(),
            [](const auto& a, const auto& b) { return face_less(a.face, b.face); });

  if (result.facets.empty() && m.theorem_sized(color_count)) {
    throw NoSolution(k.n(), k.r(), m, {colorings.begin(), colorings.end()});
  }

  std::vector<Face> minimal_faces;
  if (options.exhaustive) {
    const auto& faces = k.complex()->faces();
    std::vector<std::optional<SolutionReport>> slots(faces.size());
    parallel_for(faces.size(), options.jobs, [&](std::size_t j) {
      if (is_size_solution(faces[j], colorings, m)) {
        slots[j] = make_report(faces[j], colorings, m, color_count);
      }
    });
    for (auto& slot : slots) {
      if (!slot) continue;
      if (slot->minimal) minimal_faces.push_back(slot->face);
      result.all.push_back(std::move(*slot));
    }
  } else {
    for (auto& slot : minimal_slots) {
      if (slot) minimal_faces.push_back(std::move(*slot));
    }
  }
  std::sort(minimal_faces.begin(), minimal_faces.end(), face_less);
  minimal_faces.erase(std::unique(minimal_faces.begin(), minimal_faces.end()),
                      minimal_faces.end());
  for (const auto& f : minimal_faces) {
    result.minimal.push_back(make_report(f, colorings, m, color_count));
  }
  return result;
}

}  // namespace sperner
