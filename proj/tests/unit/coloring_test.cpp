#include <gtest/gtest.h>

#include <algorithm>

#include "sperner/coloring.hpp"
#include "sperner/solver.hpp"

namespace sperner {
namespace {

const std::vector<std::vector<int>> kCube = {{0, 1, 2, 3, 5}, {0, 1, 2, 2, 5}, {0, 1, 1, 2, 5},
                                             {0, 0, 1, 2, 5}, {0, 1, 1, 1, 5}, {0, 0, 1, 1, 5},
                                             {0, 0, 0, 1, 5}, {0, 0, 0, 0, 5}};

std::vector<Tiebreak> all_tiebreaks(int n) {
  std::vector<Tiebreak> out;
  Tiebreak t = ascending_tiebreak(n);
  do {
    out.push_back(t);
  } while (std::next_permutation(t.begin(), t.end()));
  return out;
}

TEST(ColorVertex, Examples) {
  const auto longest = scheme_example2(ascending_tiebreak(4));
  EXPECT_EQ(color_vertex(longest, Partition({0, 0, 0, 0, 5})), 4);
  EXPECT_EQ(color_vertex(scheme_example3(2, ascending_tiebreak(4)), Partition({0, 1, 2, 2, 5})), 2);
  EXPECT_EQ(color_vertex(scheme_example3(3, ascending_tiebreak(4)), Partition({0, 1, 2, 2, 5})), 4);
}

TEST(ColorVertex, WidthMismatchThrows) {
  EXPECT_THROW(color_vertex(scheme_example2(ascending_tiebreak(3)), Partition({0, 1, 2, 2, 5})),
               std::invalid_argument);
}

TEST(SchemeExample2, TiesAndStrictMaxima) {
  const auto s = scheme_example2(ascending_tiebreak(3));
  EXPECT_EQ(color_vertex(s, Partition({0, 1, 1, 2})), 1);
  EXPECT_EQ(color_vertex(s, Partition({0, 2, 3, 4})), 1);
  EXPECT_EQ(color_vertex(scheme_example2({3, 2, 1}), Partition({0, 1, 1, 2})), 3);
}

TEST(SchemeExample2, ClosestCornerOffTheTieLocus) {
  const auto k = PartitionComplex::build(3, 4);
  for (const auto& tb : all_tiebreaks(3)) {
    const auto s = scheme_example2(tb);
    for (const auto& p : k.partitions()) {
      const auto w = realize_coordinates(p);
      const auto top = std::max_element(w.begin(), w.end());
      if (std::count(w.begin(), w.end(), *top) > 1) {
        // On ties the choice is one of the tied corners.
        EXPECT_EQ(w[color_vertex(s, p) - 1], *top);
        continue;
      }
      EXPECT_EQ(color_vertex(s, p), static_cast<Color>(top - w.begin()) + 1);
    }
  }
}

TEST(SchemeExample3, NamedEntries) {
  const auto tb = ascending_tiebreak(4);
  EXPECT_EQ(color_vertex(scheme_example3(1, tb), Partition({0, 0, 1, 2, 5})), 4);
  EXPECT_EQ(color_vertex(scheme_example3(2, tb), Partition({0, 1, 1, 2, 5})), 4);
  EXPECT_EQ(color_vertex(scheme_example3(3, tb), Partition({0, 0, 0, 0, 5})), 4);
  EXPECT_THROW(scheme_example3(4, tb), std::invalid_argument);
}

TEST(SchemeExample3, ReproducesTheEightVertexTuples) {
  const std::vector<std::vector<Color>> tuples = {
      {1, 1, 1, 4, 1, 4, 4, 4}, {2, 2, 4, 2, 4, 2, 4, 4}, {3, 4, 3, 3, 4, 4, 3, 4}};
  for (const auto& tb : all_tiebreaks(4)) {
    for (int i = 1; i <= 3; ++i) {
      std::vector<Color> got;
      for (const auto& v : kCube) got.push_back(color_vertex(scheme_example3(i, tb), Partition(v)));
      EXPECT_EQ(got, tuples[i - 1]);
    }
  }
}

TEST(SchemeExample4, NamedEntries) {
  const int s = 2;
  const int r = 2 * s + 1;
  const auto tb = ascending_tiebreak(4);
  EXPECT_EQ(color_vertex(scheme_example4(Example4::c1, tb), Partition({0, 0, 0, s + 1, r})), 3);
  EXPECT_EQ(color_vertex(scheme_example4(Example4::c2, tb), Partition({0, 0, 0, s, r})), 4);
  for (const auto& t : all_tiebreaks(4)) {
    const Color c = color_vertex(scheme_example4(Example4::c3, t), Partition({0, 0, 1, s + 1, r}));
    EXPECT_TRUE(c == 3 || c == 4);
  }
}

TEST(SchemeExample4, NamedTetrahedronTuples) {
  const std::vector<std::vector<int>> named = {
      {0, 0, 0, 3, 5}, {0, 0, 0, 2, 5}, {0, 1, 1, 3, 5}, {0, 0, 1, 3, 5}};
  for (const auto& tb : all_tiebreaks(4)) {
    std::vector<Color> c1, c2, c3;
    for (const auto& v : named) {
      c1.push_back(color_vertex(scheme_example4(Example4::c1, tb), Partition(v)));
      c2.push_back(color_vertex(scheme_example4(Example4::c2, tb), Partition(v)));
      c3.push_back(color_vertex(scheme_example4(Example4::c3, tb), Partition(v)));
    }
    EXPECT_EQ(c1, (std::vector<Color>{3, 3, 1, 3}));
    EXPECT_EQ(c2, (std::vector<Color>{4, 4, 4, 2}));
    EXPECT_EQ(c3[0], 3);
    EXPECT_EQ(c3[1], 4);
    EXPECT_TRUE(c3[2] == 3 || c3[2] == 4);
    EXPECT_TRUE(c3[3] == 3 || c3[3] == 4);
  }
}

TEST(Tiebreak, Validation) {
  EXPECT_NO_THROW(check_tiebreak({2, 1, 3}, 3));
  EXPECT_THROW(check_tiebreak({1, 1, 3}, 3), std::invalid_argument);
  EXPECT_THROW(check_tiebreak({1, 2}, 3), std::invalid_argument);
}

TEST(RandomColoring, SpernerAndDeterministic) {
  const auto k = PartitionComplex::build(4, 4);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto c = random_sperner_coloring(k, seed);
    EXPECT_TRUE(is_sperner_coloring(k, c));
    EXPECT_EQ(c, random_sperner_coloring(k, seed));
  }
  EXPECT_NE(random_sperner_coloring(k, 1), random_sperner_coloring(k, 2));
}

TEST(RandomColoring, SubdividedEdgeEndpointsAreForced) {
  for (int r = 1; r <= 6; ++r) {
    const auto k = PartitionComplex::build(2, r);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto c = random_sperner_coloring(k, seed);
      EXPECT_EQ(c[k.vertex_of(Partition({0, r, r}))], 1);
      EXPECT_EQ(c[k.vertex_of(Partition({0, 0, r}))], 2);
    }
  }
}

TEST(Schemes, EveryFamilyIsSperner) {
  const std::vector<Tiebreak> orders4 = {{1, 2, 3, 4}, {4, 3, 2, 1}, {2, 4, 1, 3}};
  for (int n = 1; n <= 4; ++n) {
    for (int r = 1; r <= 7; ++r) {
      const auto k = PartitionComplex::build(n, r);
      for (const auto& base : orders4) {
        Tiebreak tb;
        for (Color c : base) {
          if (c <= n) tb.push_back(c);
        }
        std::vector<RatingScheme> schemes{scheme_example2(tb), RankedScheme{{n}, tb},
                                          RankedScheme{{1}, tb}, RankedScheme{tb, tb}};
        if (n == 4) {
          for (int i = 1; i <= 3; ++i) schemes.push_back(scheme_example3(i, tb));
          for (auto w : {Example4::c1, Example4::c2, Example4::c3}) {
            schemes.push_back(scheme_example4(w, tb));
          }
        }
        for (const auto& s : schemes) {
          EXPECT_TRUE(is_sperner_coloring(k, apply_scheme(s, k))) << "n=" << n << " r=" << r;
        }
      }
    }
  }
}

TEST(SchemeExample3, SolutionSetIgnoresFallbackTiebreak) {
  const auto k = PartitionComplex::build(4, 5);
  const SizeVector m{{1, 1, 1}};
  SolveOptions opts;
  opts.exhaustive = true;
  std::vector<Face> reference;
  for (const auto& tb : all_tiebreaks(4)) {
    std::vector<VertexColoring> cs;
    for (int i = 1; i <= 3; ++i) cs.push_back(apply_scheme(scheme_example3(i, tb), k));
    std::vector<Face> faces;
    for (const auto& rep : find_solutions(k, cs, m, opts).all) faces.push_back(rep.face);
    if (reference.empty()) reference = faces;
    EXPECT_EQ(faces, reference);
  }
  EXPECT_FALSE(reference.empty());
}

}  // namespace
}  // namespace sperner
