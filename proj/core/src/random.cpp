#include "polytor/random.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <vector>

namespace polytor {

Rng make_stream(std::uint64_t seed, std::uint64_t stream, std::uint64_t substream) {
  std::array<std::uint32_t, 6> words{
      static_cast<std::uint32_t>(seed),      static_cast<std::uint32_t>(seed >> 32),
      static_cast<std::uint32_t>(stream),    static_cast<std::uint32_t>(stream >> 32),
      static_cast<std::uint32_t>(substream), static_cast<std::uint32_t>(substream >> 32)};
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) {
  std::vector<std::uint32_t> words{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
  for (unsigned char c : label) words.push_back(c);
  std::seed_seq seq(words.begin(), words.end());
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Complex random_unit(Rng& rng) { return std::polar(1.0, 2.0 * std::numbers::pi * uniform01(rng)); }

Complex complex_gaussian(Rng& rng) {
  // Box–Muller on one draw pair gives two independent N(0, 1/2) parts.
  const double u1 = 1.0 - uniform01(rng);
  const double u2 = uniform01(rng);
  const double radius = std::sqrt(-std::log(u1));
  return std::polar(radius, 2.0 * std::numbers::pi * u2);
}

Vector gaussian_vector(std::size_t dim, Rng& rng) {
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) v[i] = complex_gaussian(rng);
  return v;
}

}  // namespace polytor
