#pragma once

// Seeded samplers for the property suites. Every draw comes from one
// SplitMix64 stream, so a sample is reproduced from its seed alone.

#include "sperner/random.hpp"
#include "sperner/solver.hpp"
#include "sperner/topology.hpp"

namespace sperner {

/// Size vector with `parts` entries summing to `total`; each unit lands on a
/// uniformly chosen index.
SizeVector random_size_vector(SplitMix64& rng, int total, int parts);

/// A point of Y. Requires some m_i >= 1.
NonnegGrid sample_Y(SplitMix64& rng, std::size_t colors, const SizeVector& m);

/// A point of X. Requires some m_i >= 1.
NonnegGrid sample_X(SplitMix64& rng, std::size_t colors, const SizeVector& m);

}  // namespace sperner
