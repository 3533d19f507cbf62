#include "sperner/simplicial.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_set>

namespace sperner {
namespace {

std::string format_face(const Face& f) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << f[i];
  os << '}';
  return os.str();
}

struct FaceLess {
  bool operator()(const Face& a, const Face& b) const { return face_less(a, b); }
};

void add_all_subsets(const Face& face, std::set<Face, FaceLess>& out) {
  if (face.size() > 30) throw SimplicialError("face too large to close down");
  const std::uint64_t count = std::uint64_t{1} << face.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    Face sub;
    for (std::size_t i = 0; i < face.size(); ++i) {
      if ((mask >> i) & 1U) sub.push_back(face[i]);
    }
    out.insert(std::move(sub));
  }
}

}  // namespace

bool face_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

Face make_face(std::vector<VertexId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool is_subface(const Face& a, const Face& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

NotClosed::NotClosed(Face missing_face, Face present_face)
    : SimplicialError("face family not closed under inclusion: " + format_face(missing_face) +
                      " missing below " + format_face(present_face)),
      missing(std::move(missing_face)),
      present(std::move(present_face)) {}

NotSimplicial::NotSimplicial(Face f)
    : SimplicialError("vertex map sends face " + format_face(f) + " outside the target"),
      face(std::move(f)) {}

Complex Complex::validate(std::vector<std::string> vertex_names, std::vector<Face> faces) {
  {
    std::unordered_set<std::string> seen;
    for (const auto& n : vertex_names) {
      if (!seen.insert(n).second) throw SimplicialError("duplicate vertex name '" + n + "'");
    }
  }
  for (auto& f : faces) {
    if (!std::is_sorted(f.begin(), f.end()) ||
        std::adjacent_find(f.begin(), f.end()) != f.end()) {
      throw SimplicialError("face " + format_face(f) + " is not a strictly increasing id list");
    }
    if (!f.empty() && f.back() >= vertex_names.size()) {
      throw SimplicialError("face " + format_face(f) + " uses an unknown vertex");
    }
  }
  faces.emplace_back();
  std::sort(faces.begin(), faces.end(), face_less);
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

  // Codimension-one subfaces suffice: closure then follows by induction on size.
  for (const auto& f : faces) {
    for (std::size_t drop = f.size(); drop-- > 0;) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!std::binary_search(faces.begin(), faces.end(), sub, face_less)) {
        throw NotClosed(std::move(sub), f);
      }
    }
  }
  for (VertexId v = 0; v < vertex_names.size(); ++v) {
    if (!std::binary_search(faces.begin(), faces.end(), Face{v}, face_less)) {
      throw SimplicialError("vertex '" + vertex_names[v] + "' lies in no face");
    }
  }
  return Complex(std::move(vertex_names), std::move(faces));
}

Complex Complex::close_down(std::vector<std::string> vertex_names, const std::vector<Face>& faces) {
  std::set<Face, FaceLess> closed;
  for (const auto& f : faces) add_all_subsets(make_face(f), closed);
  return validate(std::move(vertex_names), std::vector<Face>(closed.begin(), closed.end()));
}

std::optional<VertexId> Complex::find_vertex(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

bool Complex::contains(const Face& face) const {
  return std::binary_search(faces_.begin(), faces_.end(), face, face_less);
}

std::optional<std::size_t> Complex::index_of(const Face& face) const {
  const auto it = std::lower_bound(faces_.begin(), faces_.end(), face, face_less);
  if (it == faces_.end() || *it != face) return std::nullopt;
  return static_cast<std::size_t>(it - faces_.begin());
}

std::vector<Face> Complex::facets() const {
  // A face is maximal iff no one-vertex extension is a face.
  std::vector<Face> out;
  for (const auto& f : faces_) {
    bool maximal = true;
    for (VertexId v = 0; v < names_.size() && maximal; ++v) {
      if (std::binary_search(f.begin(), f.end(), v)) continue;
      Face g = f;
      g.insert(std::upper_bound(g.begin(), g.end(), v), v);
      if (contains(g)) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::size_t Complex::max_face_size() const { return faces_.back().size(); }

Complex simplex(std::vector<std::string> vertex_names) {
  Face all(vertex_names.size());
  for (VertexId v = 0; v < all.size(); ++v) all[v] = v;
  return Complex::close_down(std::move(vertex_names), {all});
}

Complex skeleton(const Complex& k, std::size_t m) {
  std::vector<Face> kept;
  for (const auto& f : k.faces()) {
    if (f.size() <= m) kept.push_back(f);
  }
  // Vertices drop out with m = 0; keep only those still used.
  if (m == 0) return Complex::validate({}, {});
  return Complex::validate(k.vertex_names(), std::move(kept));
}

Complex join(const Complex& k, const Complex& k2) {
  const auto width = static_cast<VertexId>(k2.vertex_count());
  std::vector<std::string> names;
  names.reserve(k.vertex_count() * k2.vertex_count());
  for (const auto& a : k.vertex_names()) {
    for (const auto& b : k2.vertex_names()) names.push_back("(" + a + "," + b + ")");
  }
  // Every face has projections inside some facet pair, and every subset of
  // F x F' has face projections, so the join is the closure of the products.
  std::vector<Face> products;
  for (const auto& f : k.facets()) {
    for (const auto& g : k2.facets()) {
      Face prod;
      for (VertexId a : f) {
        for (VertexId b : g) prod.push_back(a * width + b);
      }
      products.push_back(make_face(std::move(prod)));
    }
  }
  // Vertices of V x V' whose coordinates are not both vertices of a face are
  // impossible: every vertex lies in a singleton face, so all pairs appear.
  return Complex::close_down(std::move(names), products);
}

FaceMap::FaceMap(ComplexPtr source, ComplexPtr target, std::vector<Face> image)
    : source_(std::move(source)), target_(std::move(target)), image_(std::move(image)) {
  const auto& faces = source_->faces();
  if (image_.size() != faces.size()) throw SimplicialError("face map image has wrong length");
  for (const auto& im : image_) {
    if (!target_->contains(im)) throw SimplicialError("face map image is not a target face");
  }
  for (std::size_t j = 0; j < faces.size(); ++j) {
    const Face& f = faces[j];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face sub = f;
      sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
      if (!is_subface(image_[*source_->index_of(sub)], image_[j])) {
        throw SimplicialError("face map is not order preserving");
      }
    }
  }
}

const Face& FaceMap::operator()(const Face& face) const {
  const auto idx = source_->index_of(face);
  if (!idx) throw SimplicialError("not a face of the source complex");
  return image_[*idx];
}

VertexMap::VertexMap(ComplexPtr source, ComplexPtr target, std::vector<VertexId> assignment)
    : source_(std::move(source)), target_(std::move(target)), assignment_(std::move(assignment)) {
  if (assignment_.size() != source_->vertex_count()) {
    throw SimplicialError("vertex map is not total on the source vertices");
  }
  for (VertexId w : assignment_) {
    if (w >= target_->vertex_count()) throw SimplicialError("vertex map leaves the target");
  }
  for (const auto& f : source_->faces()) {
    if (!target_->contains(image(f))) throw NotSimplicial(f);
  }
}

Face VertexMap::image(const Face& face) const {
  std::vector<VertexId> ids;
  ids.reserve(face.size());
  for (VertexId v : face) ids.push_back(assignment_.at(v));
  return make_face(std::move(ids));
}

FaceMap VertexMap::induced() const {
  std::vector<Face> im;
  im.reserve(source_->faces().size());
  for (const auto& f : source_->faces()) im.push_back(image(f));
  return FaceMap(source_, target_, std::move(im));
}

namespace {
bool same_complex(const ComplexPtr& a, const ComplexPtr& b) { return a == b || *a == *b; }
}  // namespace

bool leq_maps(const FaceMap& f, const FaceMap& g) {
  if (!same_complex(f.source(), g.source()) || !same_complex(f.target(), g.target())) {
    throw SourceMismatch();
  }
  for (std::size_t j = 0; j < f.image().size(); ++j) {
    if (!is_subface(f.image()[j], g.image()[j])) return false;
  }
  return true;
}

bool is_sperner_coloring(const VertexMap& c, const FaceMap& f) {
  return leq_maps(c.induced(), f);
}

RealizationPoint::RealizationPoint(ComplexPtr complex, std::vector<double> weights)
    : complex_(std::move(complex)), weights_(std::move(weights)) {
  if (weights_.size() != complex_->vertex_count()) {
    throw SimplicialError("realization point has wrong dimension");
  }
  double total = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) throw SimplicialError("realization weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > kWeightTolerance) {
    throw SimplicialError("realization weights must sum to 1");
  }
  if (!complex_->contains(support())) throw SimplicialError("support is not a face");
}

RealizationPoint RealizationPoint::vertex(ComplexPtr complex, VertexId v) {
  std::vector<double> w(complex->vertex_count(), 0.0);
  w.at(v) = 1.0;
  return RealizationPoint(std::move(complex), std::move(w));
}

RealizationPoint RealizationPoint::barycenter(ComplexPtr complex, const Face& face) {
  if (face.empty()) throw SimplicialError("the empty face has no barycenter");
  std::vector<double> w(complex->vertex_count(), 0.0);
  for (VertexId v : face) w.at(v) = 1.0 / static_cast<double>(face.size());
  return RealizationPoint(std::move(complex), std::move(w));
}

Face RealizationPoint::support() const {
  Face s;
  for (VertexId v = 0; v < weights_.size(); ++v) {
    if (weights_[v] > 0.0) s.push_back(v);
  }
  return s;
}

RealizationPoint pushforward(const VertexMap& c, const RealizationPoint& k) {
  if (!same_complex(c.source(), k.complex())) throw SourceMismatch();
  std::vector<double> w(c.target()->vertex_count(), 0.0);
  for (VertexId u = 0; u < k.weights().size(); ++u) w[c(u)] += k[u];
  return RealizationPoint(c.target(), std::move(w));
}

}  // namespace sperner
