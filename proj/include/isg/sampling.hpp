#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "isg/spectrum.hpp"

namespace isg {

using Rng = std::mt19937_64;

// All generator tokens: vertices, then each edge and its inverse.
std::vector<Token> all_tokens(const SeparatedGraph& g);
// Length uniform in [1, max_len], tokens uniform.
std::vector<Token> random_word(const SeparatedGraph& g, Rng& rng, std::size_t max_len);
// A composable word of letters from a random vertex; tends to be nonzero.
std::vector<Token> random_walk(const SeparatedGraph& g, Rng& rng, std::size_t max_len);

// Lower closure of a few random C-separated paths from v (maybe incompatible).
LowerSet random_lower_set(const SeparatedGraph& g, Rng& rng, VertexId v, std::size_t max_len);
// Compatible lower set grown greedily from `seed` with random paths.
LowerSet random_y0(const SeparatedGraph& g, Rng& rng, const LowerSet& seed, std::size_t max_len,
                   std::size_t tries = 6);
// Random valid cylinder at v, or nullopt when sampling fails to produce one.
std::optional<CylinderSet> random_cylinder(const SeparatedGraph& g, Rng& rng, VertexId v, std::size_t max_len);
// Compatible lower set of paths shorter than `depth`, seeded by a random
// choice among `hints` so that membership questions are not trivially false.
FilterTruncation random_truncation(const SeparatedGraph& g, Rng& rng, VertexId v, std::size_t depth,
                                   const std::vector<Path>& hints);

}  // namespace isg
