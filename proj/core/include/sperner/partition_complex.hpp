#pragma once

// The partition complex K_{n,r}: vertices are the ways of cutting a row of r
// objects into n (possibly empty) consecutive intervals, recorded as
// nondecreasing cut sequences p(0)=0 <= p(1) <= ... <= p(n)=r. Interval i
// holds the objects p(i-1)+1 .. p(i).
//
// A set of partitions is a face when every pair differs by a 0/1 vector in
// one direction. Realized through interval lengths / r, K_{n,r} is the
// staircase triangulation of the (n-1)-simplex P[1,n] into r^(n-1) cells.

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "sperner/color_set.hpp"
#include "sperner/simplicial.hpp"

namespace sperner {

class Partition {
 public:
  /// Throws std::invalid_argument unless cuts[0]=0, cuts nondecreasing and
  /// there are at least two entries.
  explicit Partition(std::vector<int> cuts);

  int n() const { return static_cast<int>(cuts_.size()) - 1; }
  int r() const { return cuts_.back(); }
  int operator[](int i) const { return cuts_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& cuts() const { return cuts_; }

  /// Length of interval i in [1, n].
  int length(int i) const { return cuts_.at(i) - cuts_.at(i - 1); }
  bool interval_empty(int i) const { return length(i) == 0; }
  /// Labels of the nonempty intervals.
  ColorSet nonempty_intervals() const;

  /// "(0,1,2,2)"
  std::string name() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> cuts_;
};

struct MixedParameters : std::invalid_argument {
  MixedParameters() : std::invalid_argument("partitions with different (n, r) in one face") {}
};

/// All of Pi_{n,r} in lexicographic order. Size C(r+n-1, n-1).
std::vector<Partition> enumerate_partitions(int n, int r);

/// Pairwise test: a - b is a 0/1 vector in one of the two directions.
bool comparable(const Partition& a, const Partition& b);

/// Face predicate of K_{n,r}. Throws MixedParameters if (n, r) disagree.
bool is_face(std::span<const Partition> members);

/// f_{n,r} on a set of partitions: labels of intervals nonempty in at least
/// one member.
ColorSet subdivision_map(std::span<const Partition> members);

class PartitionComplex {
 public:
  /// Requires n >= 1, r >= 1 (throws std::invalid_argument otherwise).
  static PartitionComplex build(int n, int r);

  int n() const { return n_; }
  int r() const { return r_; }

  /// Vertex id v is partitions()[v]; ids follow lexicographic order.
  const std::vector<Partition>& partitions() const { return partitions_; }
  const Partition& partition(VertexId v) const { return partitions_.at(v); }
  VertexId vertex_of(const Partition& p) const;

  const ComplexPtr& complex() const { return complex_; }
  /// Maximal faces, grouped by bottom vertex and then lexicographic in the
  /// order in which the interior cuts are raised.
  const std::vector<Face>& facets() const { return facets_; }

  /// The simplex P[1,n]; vertex id i-1 is the color i.
  const ComplexPtr& simplex_target() const { return target_; }

  ColorSet subdivision_map(const Face& face) const;
  /// f_{n,r} as a face map into simplex_target().
  FaceMap subdivision_face_map() const;

  std::vector<Partition> members(const Face& face) const;

 private:
  int n_ = 0;
  int r_ = 0;
  std::vector<Partition> partitions_;
  std::vector<Face> facets_;
  ComplexPtr complex_;
  ComplexPtr target_;
};

/// The simplex P[1,n] with vertex names "1".."n".
Complex color_simplex(int n);

/// Face of P[1,n] holding the given labels.
Face color_face(ColorSet colors);

/// Barycentric position of a partition in |P[1,n]|: interval lengths / r.
RealizationPoint realize_vertex(const Partition& p, const ComplexPtr& color_simplex_ptr);

/// Plain coordinate form of realize_vertex.
std::vector<double> realize_coordinates(const Partition& p);

}  // namespace sperner
