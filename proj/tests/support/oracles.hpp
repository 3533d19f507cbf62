#pragma once

// Brute-force oracles for the tests. None of these call the code paths they
// are used to check: faces come from raw subset scans, sizes from literal
// definitions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include "sperner/partition_complex.hpp"
#include "sperner/random.hpp"
#include "sperner/simplicial.hpp"
#include "sperner/solver.hpp"
#include "sperner/topology.hpp"

namespace sperner::oracle {

inline std::vector<std::vector<int>> all_cut_sequences(int n, int r) {
  // Every sequence in [0,r]^(n+1) filtered by the boundary and monotone rules.
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(n) + 1, 0);
  const std::size_t total = static_cast<std::size_t>(std::pow(r + 1, n + 1));
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 0; i <= n; ++i) {
      cur[i] = static_cast<int>(c % static_cast<std::size_t>(r + 1));
      c /= static_cast<std::size_t>(r + 1);
    }
    if (cur.front() != 0 || cur.back() != r) continue;
    if (!std::is_sorted(cur.begin(), cur.end())) continue;
    out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The literal pairwise face rule: some e in {-1,1} with a(i) in {b(i), b(i)+e}.
inline bool literal_pair_rule(const std::vector<int>& a, const std::vector<int>& b) {
  for (int e : {-1, 1}) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[i] || a[i] == b[i] + e;
    if (ok) return true;
  }
  return false;
}

/// All faces of K_{n,r} by scanning every vertex subset (small cases only).
inline std::set<std::vector<std::vector<int>>> subset_faces(int n, int r) {
  const auto verts = all_cut_sequences(n, r);
  std::set<std::vector<std::vector<int>>> faces;
  const std::uint64_t count = std::uint64_t{1} << verts.size();
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      if ((mask >> i) & 1U) idx.push_back(i);
    }
    bool ok = true;
    for (std::size_t a = 0; a < idx.size() && ok; ++a) {
      for (std::size_t b = a + 1; b < idx.size() && ok; ++b) {
        ok = literal_pair_rule(verts[idx[a]], verts[idx[b]]);
      }
    }
    if (!ok) continue;
    std::vector<std::vector<int>> face;
    for (auto i : idx) face.push_back(verts[i]);
    faces.insert(face);
  }
  return faces;
}

template <typename Face>
std::set<Face> maximal_members(const std::set<Face>& family) {
  std::set<Face> out;
  for (const auto& f : family) {
    bool maximal = true;
    for (const auto& g : family) {
      if (g.size() > f.size() && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.insert(f);
  }
  return out;
}

/// Number of k-subsets of Pi_{n,r} that pass the pair rule.
inline std::size_t count_k_faces(int n, int r, std::size_t k) {
  const auto verts = all_cut_sequences(n, r);
  std::size_t count = 0;
  std::vector<std::size_t> pick;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (pick.size() == k) {
      ++count;
      return;
    }
    for (std::size_t i = start; i < verts.size(); ++i) {
      bool ok = true;
      for (auto j : pick) ok = ok && literal_pair_rule(verts[i], verts[j]);
      if (!ok) continue;
      pick.push_back(i);
      self(self, i + 1);
      pick.pop_back();
    }
  };
  rec(rec, 0);
  return count;
}

/// Join face count by scanning all subsets of V x V'.
inline std::size_t join_face_count(const Complex& k, const Complex& k2) {
  const std::size_t a = k.vertex_count();
  const std::size_t b = k2.vertex_count();
  const std::size_t cells = a * b;
  std::size_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
    std::set<VertexId> p1;
    std::set<VertexId> p2;
    for (std::size_t c = 0; c < cells; ++c) {
      if ((mask >> c) & 1U) {
        p1.insert(static_cast<VertexId>(c / b));
        p2.insert(static_cast<VertexId>(c % b));
      }
    }
    if (k.contains(Face(p1.begin(), p1.end())) && k2.contains(Face(p2.begin(), p2.end()))) ++count;
  }
  return count;
}

/// A random complex on `vertices` vertices: closure of a few random faces.
inline Complex random_complex(SplitMix64& rng, int vertices, int generators) {
  std::vector<std::string> names;
  for (int v = 0; v < vertices; ++v) names.push_back("v" + std::to_string(v));
  std::vector<Face> gens;
  for (VertexId v = 0; v < static_cast<VertexId>(vertices); ++v) gens.push_back({v});
  for (int g = 0; g < generators; ++g) {
    Face f;
    for (VertexId v = 0; v < static_cast<VertexId>(vertices); ++v) {
      if (rng.below(2)) f.push_back(v);
    }
    gens.push_back(f);
  }
  return Complex::close_down(names, gens);
}

/// in_Y straight from the set description, without the library helpers.
inline bool literal_in_Y(const NonnegGrid& y, const SizeVector& m) {
  double total = 0.0;
  for (double v : y.values()) total += v;
  if (std::abs(total - 1.0) > 1e-12) return false;
  for (std::size_t i = 0; i < y.index_count(); ++i) {
    int positive = 0;
    for (std::size_t n = 0; n < y.color_count(); ++n) positive += y.values()[i * y.color_count() + n] > 0.0;
    if (positive > m[i]) return false;
  }
  return true;
}

/// Uniform-ish random size vector with the given total and part count.
inline SizeVector random_composition(SplitMix64& rng, int total, int parts) {
  std::vector<int> m(static_cast<std::size_t>(parts), 0);
  for (int t = 0; t < total; ++t) ++m[rng.below(static_cast<std::uint64_t>(parts))];
  return SizeVector{m};
}

/// A random point of Y: each row supported on at most m_i colors.
inline NonnegGrid random_Y_point(SplitMix64& rng, std::size_t colors, const SizeVector& m) {
  std::vector<double> values(colors * m.size(), 0.0);
  double total = 0.0;
  // Force one row with m_i >= 1 to carry mass.
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= 1) eligible.push_back(i);
  }
  const std::size_t forced = eligible[rng.below(eligible.size())];
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    int k = rng.between(i == forced ? 1 : 0, std::min<int>(m[i], static_cast<int>(colors)));
    auto perm = random_permutation(rng, static_cast<int>(colors), 0);
    for (int j = 0; j < k; ++j) {
      const double v = 0.05 + rng.uniform();
      values[i * colors + static_cast<std::size_t>(perm[j])] = v;
      total += v;
    }
  }
  for (double& v : values) v /= total;
  return NonnegGrid(colors, m.size(), values);
}

/// A random point of X: every row on the simplex, one row thin enough.
inline NonnegGrid random_X_point(SplitMix64& rng, std::size_t colors, const SizeVector& m) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= 1) eligible.push_back(i);
  }
  const std::size_t thin = eligible[rng.below(eligible.size())];
  std::vector<double> values(colors * m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int cap = static_cast<int>(colors);
    const int k = i == thin ? rng.between(1, std::min(m[i], cap)) : rng.between(1, cap);
    auto perm = random_permutation(rng, cap, 0);
    double row = 0.0;
    for (int j = 0; j < k; ++j) {
      const double v = 0.05 + rng.uniform();
      values[i * colors + static_cast<std::size_t>(perm[j])] = v;
      row += v;
    }
    for (std::size_t n = 0; n < colors; ++n) values[i * colors + n] /= row;
  }
  return NonnegGrid(colors, m.size(), values);
}

}  // namespace sperner::oracle
