#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "polytor/spaces.hpp"

namespace polytor {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream, substream). Streams are keyed, not
/// sequential, so any worker can reproduce stream i without touching streams < i.
Rng make_stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream = 0);

/// Stable 64-bit seed from a base seed and a label.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label);

/// Uniform in [0, 1) from the top 53 bits of one draw.
double uniform01(Rng& rng);
/// Uniform point on the unit circle.
Complex random_unit(Rng& rng);
/// Standard complex Gaussian (E|g|² = 1).
Complex complex_gaussian(Rng& rng);
Vector gaussian_vector(std::size_t dim, Rng& rng);

}  // namespace polytor
