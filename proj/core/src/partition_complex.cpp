#include "sperner/partition_complex.hpp"

#include <algorithm>
#include <stdexcept>

namespace sperner {

Partition::Partition(std::vector<int> cuts) : cuts_(std::move(cuts)) {
  if (cuts_.size() < 2) throw std::invalid_argument("a partition needs at least one interval");
  if (cuts_.front() != 0) throw std::invalid_argument("a partition must start at 0");
  if (!std::is_sorted(cuts_.begin(), cuts_.end())) {
    throw std::invalid_argument("partition cuts must be nondecreasing");
  }
}

ColorSet Partition::nonempty_intervals() const {
  ColorSet s;
  for (int i = 1; i <= n(); ++i) {
    if (!interval_empty(i)) s.insert(i);
  }
  return s;
}

std::string Partition::name() const {
  std::string s = "(";
  for (std::size_t i = 0; i < cuts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(cuts_[i]);
  }
  return s + ")";
}

std::vector<Partition> enumerate_partitions(int n, int r) {
  if (n < 1 || r < 0) throw std::invalid_argument("need n >= 1 and r >= 0");
  std::vector<Partition> out;
  std::vector<int> cuts(static_cast<std::size_t>(n) + 1, 0);
  cuts[static_cast<std::size_t>(n)] = r;
  // Odometer over the interior cuts 1..n-1, kept nondecreasing.
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.emplace_back(cuts);
      return;
    }
    for (int v = cuts[i - 1]; v <= r; ++v) {
      cuts[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 1);
  return out;
}

bool comparable(const Partition& a, const Partition& b) {
  bool up = false;
  bool down = false;
  for (int i = 0; i <= a.n(); ++i) {
    const int d = a[i] - b[i];
    if (d == 1) {
      up = true;
    } else if (d == -1) {
      down = true;
    } else if (d != 0) {
      return false;
    }
  }
  return !(up && down);
}

bool is_face(std::span<const Partition> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i].n() != members[0].n() || members[i].r() != members[0].r()) {
      throw MixedParameters();
    }
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!comparable(members[i], members[j])) return false;
    }
  }
  return true;
}

ColorSet subdivision_map(std::span<const Partition> members) {
  ColorSet s;
  for (const auto& p : members) s |= p.nonempty_intervals();
  return s;
}

Complex color_simplex(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  return simplex(std::move(names));
}

Face color_face(ColorSet colors) {
  Face f;
  for (Color c : colors.to_vector()) f.push_back(static_cast<VertexId>(c - 1));
  return f;
}

PartitionComplex PartitionComplex::build(int n, int r) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (r < 1) throw std::invalid_argument("need r >= 1: with r = 0 every interval is empty");

  PartitionComplex pc;
  pc.n_ = n;
  pc.r_ = r;
  pc.partitions_ = enumerate_partitions(n, r);

  // A facet is a bottom partition plus an order in which each interior cut
  // 1..n-1 is raised by one, every intermediate staying nondecreasing.
  std::vector<int> order;
  std::vector<bool> raised(static_cast<std::size_t>(n), false);
  for (const auto& bottom : pc.partitions_) {
    std::vector<int> cuts = bottom.cuts();
    Face chain{pc.vertex_of(bottom)};
    auto extend = [&](auto&& self) -> void {
      if (static_cast<int>(order.size()) == n - 1) {
        pc.facets_.push_back(make_face(chain));
        return;
      }
      for (int i = 1; i < n; ++i) {
        if (raised[i] || cuts[i] + 1 > cuts[i + 1]) continue;
        raised[i] = true;
        ++cuts[i];
        order.push_back(i);
        chain.push_back(pc.vertex_of(Partition(cuts)));
        self(self);
        chain.pop_back();
        order.pop_back();
        --cuts[i];
        raised[i] = false;
      }
    };
    extend(extend);
  }

  std::vector<std::string> names;
  names.reserve(pc.partitions_.size());
  for (const auto& p : pc.partitions_) names.push_back(p.name());
  pc.complex_ = std::make_shared<const Complex>(Complex::close_down(std::move(names), pc.facets_));
  pc.target_ = std::make_shared<const Complex>(color_simplex(n));
  return pc;
}

VertexId PartitionComplex::vertex_of(const Partition& p) const {
  const auto it = std::lower_bound(partitions_.begin(), partitions_.end(), p);
  if (it == partitions_.end() || *it != p) {
    throw std::invalid_argument("partition " + p.name() + " is not a vertex of this complex");
  }
  return static_cast<VertexId>(it - partitions_.begin());
}

std::vector<Partition> PartitionComplex::members(const Face& face) const {
  std::vector<Partition> out;
  out.reserve(face.size());
  for (VertexId v : face) out.push_back(partitions_.at(v));
  return out;
}

ColorSet PartitionComplex::subdivision_map(const Face& face) const {
  ColorSet s;
  for (VertexId v : face) s |= partitions_.at(v).nonempty_intervals();
  return s;
}

FaceMap PartitionComplex::subdivision_face_map() const {
  std::vector<Face> image;
  image.reserve(complex_->faces().size());
  for (const auto& f : complex_->faces()) image.push_back(color_face(subdivision_map(f)));
  return FaceMap(complex_, target_, std::move(image));
}

std::vector<double> realize_coordinates(const Partition& p) {
  if (p.r() < 1) throw std::invalid_argument("cannot realize a partition of zero objects");
  std::vector<double> w(static_cast<std::size_t>(p.n()));
  for (int i = 1; i <= p.n(); ++i) w[i - 1] = static_cast<double>(p.length(i)) / p.r();
  return w;
}

RealizationPoint realize_vertex(const Partition& p, const ComplexPtr& color_simplex_ptr) {
  return RealizationPoint(color_simplex_ptr, realize_coordinates(p));
}

}  // namespace sperner
