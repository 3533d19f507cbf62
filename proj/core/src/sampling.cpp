#include "sperner/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace sperner {
namespace {

// Exponential weights give uniform points on a face of the simplex.
double exponential(SplitMix64& rng) { return -std::log1p(-rng.uniform()); }

std::size_t thin_row(SplitMix64& rng, const SizeVector& m) {
  std::vector<std::size_t> eligible;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] >= 1) eligible.push_back(i);
  }
  if (eligible.empty()) throw std::invalid_argument("sampling needs some m_i >= 1");
  return eligible[rng.below(eligible.size())];
}

void fill_row(SplitMix64& rng, std::vector<double>& values, std::size_t colors, std::size_t i,
              int support) {
  const auto perm = random_permutation(rng, static_cast<int>(colors), 0);
  for (int j = 0; j < support; ++j) {
    values[i * colors + static_cast<std::size_t>(perm[j])] = exponential(rng) + 1e-3;
  }
}

}  // namespace

SizeVector random_size_vector(SplitMix64& rng, int total, int parts) {
  if (parts < 1 || total < 0) throw std::invalid_argument("bad size vector shape");
  std::vector<int> m(static_cast<std::size_t>(parts), 0);
  for (int t = 0; t < total; ++t) ++m[rng.below(static_cast<std::uint64_t>(parts))];
  return SizeVector{m};
}

NonnegGrid sample_Y(SplitMix64& rng, std::size_t colors, const SizeVector& m) {
  const std::size_t forced = thin_row(rng, m);
  const int cap = static_cast<int>(colors);
  std::vector<double> values(colors * m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    const int top = std::min(m[i], cap);
    fill_row(rng, values, colors, i, rng.between(i == forced ? 1 : 0, top));
  }
  double total = 0.0;
  for (double v : values) total += v;
  for (double& v : values) v /= total;
  return NonnegGrid(colors, m.size(), std::move(values));
}

NonnegGrid sample_X(SplitMix64& rng, std::size_t colors, const SizeVector& m) {
  const std::size_t thin = thin_row(rng, m);
  const int cap = static_cast<int>(colors);
  std::vector<double> values(colors * m.size(), 0.0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    fill_row(rng, values, colors, i, rng.between(1, i == thin ? std::min(m[i], cap) : cap));
    double row = 0.0;
    for (std::size_t n = 0; n < colors; ++n) row += values[i * colors + n];
    for (std::size_t n = 0; n < colors; ++n) values[i * colors + n] /= row;
  }
  return NonnegGrid(colors, m.size(), std::move(values));
}

}  // namespace sperner
