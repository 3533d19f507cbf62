#pragma once

// Finite simplicial complexes, face maps and barycentric points.
//
// Vertices are dense ids 0..vertex_count()-1 with a display name each; the id
// order is the canonical vertex order. A face is a strictly increasing vector
// of ids. Faces are kept sorted by (size, lexicographic), which is the
// canonical face order used for every output.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sperner {

using VertexId = std::uint32_t;
using Face = std::vector<VertexId>;

inline constexpr double kWeightTolerance = 1e-12;

/// Shortlex order on faces.
bool face_less(const Face& a, const Face& b);

/// Sorts ids and drops duplicates.
Face make_face(std::vector<VertexId> ids);

bool is_subface(const Face& a, const Face& b);

struct SimplicialError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// The face family is not inclusion closed: `missing` is absent although it
/// is contained in `present`.
struct NotClosed : SimplicialError {
  NotClosed(Face missing_face, Face present_face);
  Face missing;
  Face present;
};

struct SourceMismatch : SimplicialError {
  SourceMismatch() : SimplicialError("face maps have different source or target complexes") {}
};

struct NotSimplicial : SimplicialError {
  explicit NotSimplicial(Face face);
  Face face;
};

class Complex {
 public:
  /// Validates that `faces` is inclusion closed. The empty face is implied.
  /// Every named vertex must occur in some face.
  static Complex validate(std::vector<std::string> vertex_names, std::vector<Face> faces);

  /// Adds every subface of every listed face, then validates.
  static Complex close_down(std::vector<std::string> vertex_names, const std::vector<Face>& faces);

  std::size_t vertex_count() const { return names_.size(); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const std::string& name(VertexId v) const { return names_.at(v); }
  std::optional<VertexId> find_vertex(const std::string& name) const;

  /// All faces in canonical order, starting with the empty face.
  const std::vector<Face>& faces() const { return faces_; }
  bool contains(const Face& face) const;
  /// Position of `face` in faces(), if present.
  std::optional<std::size_t> index_of(const Face& face) const;

  /// Faces not strictly contained in another face.
  std::vector<Face> facets() const;
  /// Largest face size (dimension + 1).
  std::size_t max_face_size() const;

  bool operator==(const Complex&) const = default;

 private:
  Complex(std::vector<std::string> names, std::vector<Face> faces)
      : names_(std::move(names)), faces_(std::move(faces)) {}

  std::vector<std::string> names_;
  std::vector<Face> faces_;
};

using ComplexPtr = std::shared_ptr<const Complex>;

/// The full simplex on named vertices: every subset is a face.
Complex simplex(std::vector<std::string> vertex_names);

/// Faces of size at most m.
Complex skeleton(const Complex& k, std::size_t m);

/// Join in the sense of the product vertex set: a subset A of V x V' is a face
/// when both coordinate projections are faces. Vertex (a, b) gets id
/// a * |V'| + b and the name "(name_a,name_b)".
Complex join(const Complex& k, const Complex& k2);

/// An order preserving map between face posets. image()[j] is the image of
/// source->faces()[j].
class FaceMap {
 public:
  /// Checks that every image is a target face and that the map is order
  /// preserving; throws SimplicialError otherwise.
  FaceMap(ComplexPtr source, ComplexPtr target, std::vector<Face> image);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  const std::vector<Face>& image() const { return image_; }
  const Face& operator()(const Face& face) const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<Face> image_;
};

/// A total vertex assignment. Construction checks that it is simplicial.
class VertexMap {
 public:
  VertexMap(ComplexPtr source, ComplexPtr target, std::vector<VertexId> assignment);

  const ComplexPtr& source() const { return source_; }
  const ComplexPtr& target() const { return target_; }
  const std::vector<VertexId>& assignment() const { return assignment_; }
  VertexId operator()(VertexId v) const { return assignment_.at(v); }

  Face image(const Face& face) const;
  /// The induced face map A -> {f0(v) | v in A}.
  FaceMap induced() const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<VertexId> assignment_;
};

/// f <= g iff f(A) is a subset of g(A) for every face A.
bool leq_maps(const FaceMap& f, const FaceMap& g);

/// c is a Sperner coloring for f when its induced map specializes f.
bool is_sperner_coloring(const VertexMap& c, const FaceMap& f);

/// A point of |K| in barycentric coordinates.
class RealizationPoint {
 public:
  /// Requires nonnegative weights summing to 1 whose support is a face.
  RealizationPoint(ComplexPtr complex, std::vector<double> weights);

  static RealizationPoint vertex(ComplexPtr complex, VertexId v);
  /// Uniform weights over the vertices of a nonempty face.
  static RealizationPoint barycenter(ComplexPtr complex, const Face& face);

  const ComplexPtr& complex() const { return complex_; }
  const std::vector<double>& weights() const { return weights_; }
  double operator[](VertexId v) const { return weights_.at(v); }
  Face support() const;

 private:
  ComplexPtr complex_;
  std::vector<double> weights_;
};

/// |c|(k): the weight of w is the total weight of its preimages.
RealizationPoint pushforward(const VertexMap& c, const RealizationPoint& k);

}  // namespace sperner
