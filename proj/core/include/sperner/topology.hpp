#pragma once

// Numerical versions of the spaces and maps of the degree argument.
//
// A grid x : N x I -> R>=0 is stored with one row per index i and one column
// per color n. Writing S_i for row sums, S_n for column sums and S for the
// total:
//
//   X = { x : every S_i x = 1, and some row i has at most m_i positive entries }
//   Y = { y : S y = 1, and every row i has at most m_i positive entries }
//
//   J(y)(n,i) = a_y (y(n,i) + s_y(i)),   s_y(i) = (max_j S_j y - S_i y) / |N|,
//                                        a_y    = 1 / max_j S_j y
//   H(x)(n,i) = b_x max(x(n,i) - r_x(i), 0),
//               r_x(i) = least r with at most m_i entries of row i above r,
//               b_x normalizes the total to 1
//   rho(y)(n) = S_n y
//   C(k)      = (|c_i|(k))_i
//
// All comparisons use an absolute tolerance of 1e-12.

#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "sperner/coloring.hpp"
#include "sperner/partition_complex.hpp"
#include "sperner/simplicial.hpp"
#include "sperner/solver.hpp"

namespace sperner {

inline constexpr double kMapTolerance = 1e-12;

class NonnegGrid {
 public:
  NonnegGrid(std::size_t color_count, std::size_t index_count);
  /// Row-major by index: values[i * color_count + n]. Throws on negative
  /// or non-finite entries.
  NonnegGrid(std::size_t color_count, std::size_t index_count, std::vector<double> values);

  std::size_t color_count() const { return colors_; }
  std::size_t index_count() const { return indices_; }

  /// Entry at 0-based color n and 0-based index i.
  double operator()(std::size_t n, std::size_t i) const { return values_[i * colors_ + n]; }
  void set(std::size_t n, std::size_t i, double v);
  std::span<const double> row(std::size_t i) const {
    return {values_.data() + i * colors_, colors_};
  }
  const std::vector<double>& values() const { return values_; }
  /// Number of strictly positive entries in row i.
  std::size_t row_support(std::size_t i) const;

  double max_abs_difference(const NonnegGrid& other) const;
  bool operator==(const NonnegGrid&) const = default;

 private:
  std::size_t colors_;
  std::size_t indices_;
  std::vector<double> values_;
};

struct GridSums {
  double total = 0.0;
  std::vector<double> per_index;  ///< S_i
  std::vector<double> per_color;  ///< S_n
};

GridSums sums(const NonnegGrid& g);

struct NotInX : std::domain_error {
  NotInX() : std::domain_error("grid is not a point of X") {}
};
struct NotInY : std::domain_error {
  NotInY() : std::domain_error("grid is not a point of Y") {}
};

bool in_X(const NonnegGrid& x, const SizeVector& m);
bool in_Y(const NonnegGrid& y, const SizeVector& m);

NonnegGrid map_J(const NonnegGrid& y, const SizeVector& m);

/// r_x(i): the (m_i + 1)-th largest entry of the row, or 0 when the row has
/// at most m_i positive entries.
double shift_threshold(std::span<const double> row, int m_i);

NonnegGrid map_H(const NonnegGrid& x, const SizeVector& m);

/// A point of the boundary of |P N|: coordinates sum to 1, one is zero.
class BoundaryPoint {
 public:
  explicit BoundaryPoint(std::vector<double> coords);
  const std::vector<double>& coords() const { return coords_; }

 private:
  std::vector<double> coords_;
};

BoundaryPoint map_rho(const NonnegGrid& y, const SizeVector& m);

/// Row i is the pushforward of k along colorings[i].
NonnegGrid map_C(const RealizationPoint& k, std::span<const VertexMap> colorings);

/// Same grid straight from labels and vertex weights, for hot loops.
NonnegGrid map_C(std::span<const double> weights, std::span<const VertexColoring> colorings,
                 int color_count);

/// t x + (1 - t) J(H(x)).
NonnegGrid homotopy_point(const NonnegGrid& x, double t, const SizeVector& m);

/// max |H(J(y)) - y|.
double roundtrip_check(const NonnegGrid& y, const SizeVector& m);

struct BoundarySolutionFound : std::runtime_error {
  explicit BoundarySolutionFound(Face f);
  Face face;
};

struct WindingOptions {
  int min_level = 0;   ///< each boundary edge is cut into 2^level pieces
  int max_level = 20;
  bool trace = false;
};

struct WindingResult {
  int winding = 0;
  int level = 0;
  double max_step = 0.0;  ///< largest angle change between adjacent samples
  double total_angle = 0.0;
  /// (boundary parameter, image angle); the parameter runs over [0, edges).
  std::vector<std::pair<double, double>> trace;
};

/// Boundary faces of K_{3,r} in traversal order: the boundary cycle oriented
/// counterclockwise in the standard picture of the triangle.
std::vector<VertexId> boundary_cycle(const PartitionComplex& k);

/// Winding number of rho o H o C along the boundary of |K_{3,r}| around the
/// center of the boundary circle. Throws BoundarySolutionFound when a
/// boundary face is a size-solution (C then leaves X).
WindingResult boundary_winding(const PartitionComplex& k, std::span<const VertexColoring> colorings,
                               const SizeVector& m, const WindingOptions& options = {});

}  // namespace sperner
