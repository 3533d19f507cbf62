#include "sperner/topology.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

namespace sperner {

NonnegGrid::NonnegGrid(std::size_t color_count, std::size_t index_count)
    : colors_(color_count), indices_(index_count), values_(color_count * index_count, 0.0) {}

NonnegGrid::NonnegGrid(std::size_t color_count, std::size_t index_count, std::vector<double> values)
    : colors_(color_count), indices_(index_count), values_(std::move(values)) {
  if (values_.size() != colors_ * indices_) throw std::invalid_argument("grid has wrong size");
  for (double v : values_) {
    if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("grid entries must be >= 0");
  }
}

void NonnegGrid::set(std::size_t n, std::size_t i, double v) {
  if (!std::isfinite(v) || v < 0.0) throw std::invalid_argument("grid entries must be >= 0");
  values_.at(i * colors_ + n) = v;
}

std::size_t NonnegGrid::row_support(std::size_t i) const {
  const auto r = row(i);
  return static_cast<std::size_t>(std::count_if(r.begin(), r.end(), [](double v) { return v > 0.0; }));
}

double NonnegGrid::max_abs_difference(const NonnegGrid& other) const {
  if (other.colors_ != colors_ || other.indices_ != indices_) {
    throw std::invalid_argument("grids have different shapes");
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < values_.size(); ++j) {
    worst = std::max(worst, std::abs(values_[j] - other.values_[j]));
  }
  return worst;
}

GridSums sums(const NonnegGrid& g) {
  GridSums s;
  s.per_index.assign(g.index_count(), 0.0);
  s.per_color.assign(g.color_count(), 0.0);
  for (std::size_t i = 0; i < g.index_count(); ++i) {
    for (std::size_t n = 0; n < g.color_count(); ++n) {
      s.per_index[i] += g(n, i);
      s.per_color[n] += g(n, i);
    }
  }
  for (double v : s.per_index) s.total += v;
  return s;
}

namespace {

void check_shape(const NonnegGrid& g, const SizeVector& m) {
  if (g.index_count() != m.size()) throw std::invalid_argument("need one size m_i per grid row");
}

}  // namespace

bool in_X(const NonnegGrid& x, const SizeVector& m) {
  check_shape(x, m);
  const auto s = sums(x);
  bool witness = false;
  for (std::size_t i = 0; i < x.index_count(); ++i) {
    if (std::abs(s.per_index[i] - 1.0) > kMapTolerance) return false;
    if (x.row_support(i) <= static_cast<std::size_t>(std::max(m[i], 0))) witness = true;
  }
  return witness;
}

bool in_Y(const NonnegGrid& y, const SizeVector& m) {
  check_shape(y, m);
  if (std::abs(sums(y).total - 1.0) > kMapTolerance) return false;
  for (std::size_t i = 0; i < y.index_count(); ++i) {
    if (y.row_support(i) > static_cast<std::size_t>(std::max(m[i], 0))) return false;
  }
  return true;
}

NonnegGrid map_J(const NonnegGrid& y, const SizeVector& m) {
  if (!in_Y(y, m)) throw NotInY();
  const auto s = sums(y);
  const double top = *std::max_element(s.per_index.begin(), s.per_index.end());
  const double scale = 1.0 / top;
  const double colors = static_cast<double>(y.color_count());
  NonnegGrid out(y.color_count(), y.index_count());
  for (std::size_t i = 0; i < y.index_count(); ++i) {
    const double shift = (top - s.per_index[i]) / colors;
    for (std::size_t n = 0; n < y.color_count(); ++n) out.set(n, i, scale * (y(n, i) + shift));
  }
  return out;
}

double shift_threshold(std::span<const double> row, int m_i) {
  std::vector<double> sorted(row.begin(), row.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const auto keep = static_cast<std::size_t>(std::max(m_i, 0));
  if (keep >= sorted.size() || sorted[keep] <= 0.0) return 0.0;
  return sorted[keep];
}

NonnegGrid map_H(const NonnegGrid& x, const SizeVector& m) {
  if (!in_X(x, m)) throw NotInX();
  NonnegGrid out(x.color_count(), x.index_count());
  double mass = 0.0;
  for (std::size_t i = 0; i < x.index_count(); ++i) {
    const double cut = shift_threshold(x.row(i), m[i]);
    for (std::size_t n = 0; n < x.color_count(); ++n) {
      const double v = std::max(x(n, i) - cut, 0.0);
      out.set(n, i, v);
      mass += v;
    }
  }
  // Some row of a point of X has r_x(i) = 0 and a positive entry.
  if (!(mass > 0.0)) throw std::logic_error("degenerate normalizer in H");
  NonnegGrid scaled(x.color_count(), x.index_count());
  for (std::size_t i = 0; i < x.index_count(); ++i) {
    for (std::size_t n = 0; n < x.color_count(); ++n) scaled.set(n, i, out(n, i) / mass);
  }
  return scaled;
}

BoundaryPoint::BoundaryPoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("boundary point needs coordinates");
  double total = 0.0;
  for (double c : coords_) {
    if (!(c >= 0.0)) throw std::invalid_argument("boundary coordinates must be >= 0");
    total += c;
  }
  if (std::abs(total - 1.0) > kMapTolerance) {
    throw std::invalid_argument("boundary coordinates must sum to 1");
  }
  if (*std::min_element(coords_.begin(), coords_.end()) > kMapTolerance) {
    throw std::invalid_argument("point is interior, not on the boundary");
  }
}

BoundaryPoint map_rho(const NonnegGrid& y, const SizeVector& m) {
  if (!in_Y(y, m)) throw NotInY();
  return BoundaryPoint(sums(y).per_color);
}

NonnegGrid map_C(const RealizationPoint& k, std::span<const VertexMap> colorings) {
  if (colorings.empty()) throw std::invalid_argument("need at least one coloring");
  const std::size_t colors = colorings.front().target()->vertex_count();
  NonnegGrid out(colors, colorings.size());
  for (std::size_t i = 0; i < colorings.size(); ++i) {
    const auto image = pushforward(colorings[i], k);
    if (image.weights().size() != colors) throw std::invalid_argument("colorings disagree on N");
    for (std::size_t n = 0; n < colors; ++n) out.set(n, i, image.weights()[n]);
  }
  return out;
}

NonnegGrid map_C(std::span<const double> weights, std::span<const VertexColoring> colorings,
                 int color_count) {
  const auto colors = static_cast<std::size_t>(color_count);
  std::vector<double> values(colors * colorings.size(), 0.0);
  for (std::size_t i = 0; i < colorings.size(); ++i) {
    for (std::size_t v = 0; v < weights.size(); ++v) {
      if (weights[v] != 0.0) {
        values[i * colors + static_cast<std::size_t>(colorings[i][static_cast<VertexId>(v)] - 1)] +=
            weights[v];
      }
    }
  }
  return NonnegGrid(colors, colorings.size(), std::move(values));
}

NonnegGrid homotopy_point(const NonnegGrid& x, double t, const SizeVector& m) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("homotopy time must lie in [0,1]");
  const NonnegGrid end = map_J(map_H(x, m), m);
  NonnegGrid out(x.color_count(), x.index_count());
  for (std::size_t i = 0; i < x.index_count(); ++i) {
    for (std::size_t n = 0; n < x.color_count(); ++n) {
      out.set(n, i, t * x(n, i) + (1.0 - t) * end(n, i));
    }
  }
  return out;
}

double roundtrip_check(const NonnegGrid& y, const SizeVector& m) {
  return map_H(map_J(y, m), m).max_abs_difference(y);
}

BoundarySolutionFound::BoundarySolutionFound(Face f)
    : std::runtime_error("a boundary face is a size-solution; C leaves X there"),
      face(std::move(f)) {}

namespace {

struct Planar {
  double u;
  double v;
};

// Equilateral picture of the triangle: color 1 at (0,0), 2 at (1,0), 3 on top.
Planar chart(double a, double b, double c) {
  (void)a;
  return {b + 0.5 * c, c * std::numbers::sqrt3 / 2.0};
}

constexpr Planar kCenter{0.5, std::numbers::sqrt3 / 6.0};

double angle_of(const BoundaryPoint& p) {
  const auto& c = p.coords();
  const Planar q = chart(c[0], c[1], c[2]);
  return std::atan2(q.v - kCenter.v, q.u - kCenter.u);
}

double wrap(double d) {
  while (d > std::numbers::pi) d -= 2.0 * std::numbers::pi;
  while (d <= -std::numbers::pi) d += 2.0 * std::numbers::pi;
  return d;
}

void require_triangle(const PartitionComplex& k) {
  if (k.n() != 3) throw std::invalid_argument("boundary winding is implemented for n = 3");
}

}  // namespace

std::vector<VertexId> boundary_cycle(const PartitionComplex& k) {
  require_triangle(k);
  std::map<Face, int> incidence;
  for (const auto& facet : k.facets()) {
    for (std::size_t a = 0; a < facet.size(); ++a) {
      for (std::size_t b = a + 1; b < facet.size(); ++b) ++incidence[{facet[a], facet[b]}];
    }
  }
  std::map<VertexId, std::vector<VertexId>> adjacent;
  for (const auto& [edge, count] : incidence) {
    if (count != 1) continue;
    adjacent[edge[0]].push_back(edge[1]);
    adjacent[edge[1]].push_back(edge[0]);
  }
  if (adjacent.empty()) throw std::logic_error("complex has no boundary edges");
  for (const auto& [v, nbrs] : adjacent) {
    if (nbrs.size() != 2) throw std::logic_error("boundary is not a cycle");
  }

  std::vector<VertexId> cycle{adjacent.begin()->first};
  VertexId prev = cycle.front();
  VertexId cur = *std::min_element(adjacent[prev].begin(), adjacent[prev].end());
  while (cur != cycle.front()) {
    cycle.push_back(cur);
    const auto& nbrs = adjacent[cur];
    const VertexId next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
    prev = cur;
    cur = next;
  }
  if (cycle.size() != adjacent.size()) throw std::logic_error("boundary has several components");

  double area = 0.0;
  for (std::size_t j = 0; j < cycle.size(); ++j) {
    const auto p = realize_coordinates(k.partition(cycle[j]));
    const auto q = realize_coordinates(k.partition(cycle[(j + 1) % cycle.size()]));
    const Planar a = chart(p[0], p[1], p[2]);
    const Planar b = chart(q[0], q[1], q[2]);
    area += a.u * b.v - b.u * a.v;
  }
  if (area < 0.0) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

WindingResult boundary_winding(const PartitionComplex& k, std::span<const VertexColoring> colorings,
                               const SizeVector& m, const WindingOptions& options) {
  require_triangle(k);
  if (colorings.size() != m.size()) throw std::invalid_argument("need one size m_i per coloring");
  const auto cycle = boundary_cycle(k);
  const std::size_t edges = cycle.size();
  for (std::size_t j = 0; j < edges; ++j) {
    const Face vertex{cycle[j]};
    if (is_size_solution(vertex, colorings, m)) throw BoundarySolutionFound(vertex);
    const Face edge = make_face({cycle[j], cycle[(j + 1) % edges]});
    if (is_size_solution(edge, colorings, m)) throw BoundarySolutionFound(edge);
  }

  const std::size_t vertex_count = k.partitions().size();
  std::vector<double> weights(vertex_count, 0.0);
  auto image_angle = [&](VertexId a, VertexId b, double t) {
    std::fill(weights.begin(), weights.end(), 0.0);
    weights[a] += 1.0 - t;
    weights[b] += t;
    const NonnegGrid x = map_C(weights, colorings, k.n());
    if (!in_X(x, m)) throw std::logic_error("boundary sample left X");
    return angle_of(map_rho(map_H(x, m), m));
  };

  for (int level = std::max(options.min_level, 0); level <= options.max_level; ++level) {
    const std::size_t pieces = std::size_t{1} << level;
    WindingResult res;
    res.level = level;
    std::vector<double> angles;
    angles.reserve(edges * pieces);
    for (std::size_t j = 0; j < edges; ++j) {
      for (std::size_t p = 0; p < pieces; ++p) {
        const double t = static_cast<double>(p) / static_cast<double>(pieces);
        angles.push_back(image_angle(cycle[j], cycle[(j + 1) % edges], t));
        if (options.trace) res.trace.emplace_back(static_cast<double>(j) + t, angles.back());
      }
    }
    for (std::size_t s = 0; s < angles.size(); ++s) {
      const double step = wrap(angles[(s + 1) % angles.size()] - angles[s]);
      res.max_step = std::max(res.max_step, std::abs(step));
      res.total_angle += step;
    }
    if (res.max_step < std::numbers::pi / 4.0) {
      res.winding = static_cast<int>(std::lround(res.total_angle / (2.0 * std::numbers::pi)));
      return res;
    }
  }
  throw std::runtime_error("boundary winding did not settle by the maximum sampling level");
}

}  // namespace sperner
