#include <gtest/gtest.h>

#include <memory>

#include "sperner/coloring.hpp"
#include "sperner/partition_complex.hpp"
#include "sperner/simplicial.hpp"
#include "support/oracles.hpp"

namespace sperner {
namespace {

ComplexPtr share(Complex k) { return std::make_shared<const Complex>(std::move(k)); }

TEST(ValidateComplex, FullEdge) {
  const auto k = Complex::validate({"a", "b"}, {{}, {0}, {1}, {0, 1}});
  EXPECT_EQ(k.faces().size(), 4U);
  EXPECT_TRUE(k.contains({0, 1}));
}

TEST(ValidateComplex, MissingSingletonReportsWitness) {
  try {
    Complex::validate({"a", "b"}, {{}, {0, 1}});
    FAIL() << "expected NotClosed";
  } catch (const NotClosed& e) {
    EXPECT_EQ(e.missing, (Face{0}));
    EXPECT_EQ(e.present, (Face{0, 1}));
  }
}

TEST(ValidateComplex, RejectsUnusedVertexAndBadIds) {
  EXPECT_THROW(Complex::validate({"a", "b"}, {{0}}), SimplicialError);
  EXPECT_THROW(Complex::validate({"a"}, {{0}, {3}}), SimplicialError);
  EXPECT_THROW(Complex::validate({"a", "a"}, {{0}, {1}}), SimplicialError);
}

TEST(ValidateComplex, PartitionComplexFacesFromBruteForce) {
  // Faces of K_{3,2} from the literal pair rule over all vertex subsets.
  const auto brute = oracle::subset_faces(3, 2);
  const auto verts = oracle::all_cut_sequences(3, 2);
  std::vector<std::string> names;
  for (const auto& v : verts) names.push_back(Partition(v).name());
  std::vector<Face> faces;
  for (const auto& f : brute) {
    Face face;
    for (const auto& p : f) {
      face.push_back(static_cast<VertexId>(std::find(verts.begin(), verts.end(), p) - verts.begin()));
    }
    faces.push_back(make_face(face));
  }
  const auto k = Complex::validate(names, faces);
  EXPECT_EQ(k.vertex_count(), 6U);
  EXPECT_EQ(k.faces().size(), brute.size());
}

TEST(Skeleton, Definition) {
  const auto tri = simplex({"a", "b", "c"});
  const auto boundary = skeleton(tri, 2);
  EXPECT_EQ(boundary.faces().size(), 7U);
  EXPECT_FALSE(boundary.contains({0, 1, 2}));
  EXPECT_EQ(skeleton(tri, 0).faces(), std::vector<Face>{Face{}});
  const auto points = skeleton(simplex({"a", "b", "c", "d"}), 1);
  EXPECT_EQ(points.faces().size(), 5U);
  EXPECT_EQ(points.facets().size(), 4U);
}

TEST(Skeleton, ComposesAsMinimum) {
  SplitMix64 rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    const auto k = oracle::random_complex(rng, 5, 3);
    for (std::size_t a = 0; a <= 5; ++a) {
      for (std::size_t b = 0; b <= 5; ++b) {
        EXPECT_EQ(skeleton(skeleton(k, a), b).faces(), skeleton(k, std::min(a, b)).faces());
      }
    }
  }
}

TEST(Join, SingletonSimplices) {
  const auto j = join(simplex({"a"}), simplex({"b"}));
  EXPECT_EQ(j.vertex_names(), std::vector<std::string>{"(a,b)"});
  EXPECT_EQ(j.faces().size(), 2U);
}

TEST(Join, TwoPointZeroSkeletons) {
  const auto pts = skeleton(simplex({"p", "q"}), 1);
  const auto j = join(pts, pts);
  EXPECT_EQ(j.vertex_count(), 4U);
  // Projections must be single points: only the empty face and the 4 vertices.
  EXPECT_EQ(j.faces().size(), 5U);
  EXPECT_EQ(j.faces().size(), oracle::join_face_count(pts, pts));
}

TEST(Join, MatchesSubsetEnumeration) {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = oracle::random_complex(rng, 1 + static_cast<int>(rng.below(4)), 2);
    const auto b = oracle::random_complex(rng, 1 + static_cast<int>(rng.below(3)), 2);
    EXPECT_EQ(join(a, b).faces().size(), oracle::join_face_count(a, b));
  }
}

TEST(Simplex, PowerSet) {
  EXPECT_EQ(simplex({"1", "2"}).faces().size(), 4U);
  EXPECT_EQ(simplex({}).faces(), std::vector<Face>{Face{}});
  for (int n = 0; n <= 10; ++n) {
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) names.push_back(std::to_string(v));
    EXPECT_EQ(simplex(names).faces().size(), std::size_t{1} << n);
  }
}

TEST(ValidateComplex, ConstructedComplexesAreClosed) {
  SplitMix64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto k = oracle::random_complex(rng, 6, 4);
    for (const auto& f : k.faces()) {
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        Face sub = f;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(drop));
        EXPECT_TRUE(k.contains(sub));
      }
    }
  }
}

class SpernerOnPartitionComplex : public ::testing::Test {
 protected:
  PartitionComplex k = PartitionComplex::build(3, 2);
  FaceMap f = k.subdivision_face_map();
};

TEST_F(SpernerOnPartitionComplex, Reflexive) { EXPECT_TRUE(leq_maps(f, f)); }

TEST_F(SpernerOnPartitionComplex, LongestColoringSpecializesSubdivision) {
  const auto c = as_vertex_map(k, apply_scheme(scheme_example2(ascending_tiebreak(3)), k));
  EXPECT_TRUE(leq_maps(c.induced(), f));
  EXPECT_TRUE(is_sperner_coloring(c, f));
  // Direct face-by-face confirmation.
  for (const auto& face : k.complex()->faces()) {
    EXPECT_TRUE(is_subface(c.image(face), f(face)));
  }
}

TEST_F(SpernerOnPartitionComplex, ConstantOutsideCarrierIsNotBelow) {
  // Everything to color 1: (0,0,0,2) only has interval 3 nonempty.
  std::vector<VertexId> all_one(k.partitions().size(), 0);
  const VertexMap c(k.complex(), k.simplex_target(), all_one);
  EXPECT_FALSE(leq_maps(c.induced(), f));
  EXPECT_FALSE(is_sperner_coloring(c, f));
}

TEST_F(SpernerOnPartitionComplex, EmptyIntervalLabelIsNotSperner) {
  auto coloring = apply_scheme(scheme_example2(ascending_tiebreak(3)), k);
  coloring.labels[k.vertex_of(Partition({0, 0, 0, 2}))] = 2;
  EXPECT_FALSE(is_sperner_coloring(k, coloring));
}

TEST(SpernerColoring, IdentityOnUndividedSimplex) {
  const auto p = share(simplex({"1", "2", "3"}));
  const VertexMap id(p, p, {0, 1, 2});
  EXPECT_TRUE(is_sperner_coloring(id, id.induced()));
}

TEST(LeqMaps, SourceMismatch) {
  const auto a = share(simplex({"1", "2"}));
  const auto b = share(simplex({"1", "2", "3"}));
  const VertexMap f(a, a, {0, 1});
  const VertexMap g(b, b, {0, 1, 2});
  EXPECT_THROW(leq_maps(f.induced(), g.induced()), SourceMismatch);
}

TEST(LeqMaps, PartialOrderOnRandomMaps) {
  // Face maps K -> P{0,1,2} built as unions of vertex images with random
  // extra colors per facet-closed family; we use induced maps of random
  // vertex maps widened by a random constant set, which stay order preserving.
  const auto src = share(simplex({"a", "b", "c"}));
  const auto dst = share(simplex({"0", "1", "2"}));
  SplitMix64 rng(5);
  auto random_map = [&] {
    std::vector<VertexId> assign{static_cast<VertexId>(rng.below(3)), static_cast<VertexId>(rng.below(3)),
                                 static_cast<VertexId>(rng.below(3))};
    Face extra;
    for (VertexId v = 0; v < 3; ++v) {
      if (rng.below(3) == 0) extra.push_back(v);
    }
    const VertexMap vm(src, dst, assign);
    std::vector<Face> image;
    for (const auto& face : src->faces()) {
      Face im = vm.image(face);
      if (!face.empty()) {
        im.insert(im.end(), extra.begin(), extra.end());
        im = make_face(im);
      }
      image.push_back(im);
    }
    return FaceMap(src, dst, image);
  };
  std::vector<FaceMap> maps;
  for (int i = 0; i < 40; ++i) maps.push_back(random_map());
  for (const auto& f : maps) {
    EXPECT_TRUE(leq_maps(f, f));
    for (const auto& g : maps) {
      if (leq_maps(f, g) && leq_maps(g, f)) EXPECT_EQ(f.image(), g.image());
      for (const auto& h : maps) {
        if (leq_maps(f, g) && leq_maps(g, h)) EXPECT_TRUE(leq_maps(f, h));
      }
    }
  }
}

TEST(FaceMap, RejectsOrderViolation) {
  const auto src = share(simplex({"a", "b"}));
  const auto dst = share(simplex({"0", "1"}));
  // faces: {}, {a}, {b}, {a,b}; the edge maps below the vertex a.
  EXPECT_THROW(FaceMap(src, dst, {{}, {0, 1}, {1}, {1}}), SimplicialError);
}

TEST(VertexMap, RejectsNonSimplicial) {
  const auto src = share(simplex({"a", "b"}));
  const auto dst = share(skeleton(simplex({"0", "1"}), 1));
  EXPECT_THROW(VertexMap(src, dst, {0, 1}), NotSimplicial);
}

TEST(Pushforward, VertexGoesToImage) {
  const auto k = PartitionComplex::build(3, 2);
  const auto c = as_vertex_map(k, apply_scheme(scheme_example2(ascending_tiebreak(3)), k));
  for (VertexId v = 0; v < k.partitions().size(); ++v) {
    const auto out = pushforward(c, RealizationPoint::vertex(k.complex(), v));
    EXPECT_EQ(out.support(), (Face{c(v)}));
  }
}

TEST(Pushforward, MonochromeEdgeConcentrates) {
  const auto src = share(simplex({"u", "w"}));
  const auto dst = share(simplex({"1", "2"}));
  const VertexMap c(src, dst, {1, 1});
  const auto out = pushforward(c, RealizationPoint(src, {0.5, 0.5}));
  EXPECT_DOUBLE_EQ(out[1], 1.0);
  EXPECT_DOUBLE_EQ(out[0], 0.0);
}

TEST(Pushforward, FacetBarycenterSumsByColorClass) {
  const auto k = PartitionComplex::build(3, 2);
  const auto coloring = apply_scheme(scheme_example2(ascending_tiebreak(3)), k);
  const auto c = as_vertex_map(k, coloring);
  for (const auto& facet : k.facets()) {
    const auto out = pushforward(c, RealizationPoint::barycenter(k.complex(), facet));
    std::vector<double> expected(3, 0.0);
    for (VertexId v : facet) expected[coloring[v] - 1] += 1.0 / 3.0;
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(out[static_cast<VertexId>(i)], expected[i], 1e-15);
  }
}

TEST(Pushforward, PreservesMassAndMapsSupport) {
  SplitMix64 rng(13);
  const auto k = PartitionComplex::build(4, 3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto coloring = random_sperner_coloring(k, rng());
    const auto c = as_vertex_map(k, coloring);
    const auto& facet = k.facets()[rng.below(k.facets().size())];
    std::vector<double> w(k.partitions().size(), 0.0);
    double total = 0.0;
    for (VertexId v : facet) {
      if (rng.below(3) == 0) continue;
      w[v] = rng.uniform() + 0.01;
      total += w[v];
    }
    if (total == 0.0) continue;
    for (double& x : w) x /= total;
    const RealizationPoint pt(k.complex(), w);
    const auto out = pushforward(c, pt);
    double mass = 0.0;
    for (double x : out.weights()) mass += x;
    EXPECT_NEAR(mass, 1.0, 1e-12);
    EXPECT_EQ(out.support(), c.image(pt.support()));
  }
}

TEST(RealizationPoint, Validation) {
  const auto p = share(skeleton(simplex({"1", "2", "3"}), 2));
  EXPECT_NO_THROW(RealizationPoint(p, {0.5, 0.5, 0.0}));
  EXPECT_THROW(RealizationPoint(p, {0.5, 0.4, 0.0}), SimplicialError);
  EXPECT_THROW(RealizationPoint(p, {0.5, 0.6, -0.1}), SimplicialError);
  // Support {1,2,3} is not a face of the boundary.
  EXPECT_THROW(RealizationPoint(p, {0.2, 0.3, 0.5}), SimplicialError);
}

}  // namespace
}  // namespace sperner
