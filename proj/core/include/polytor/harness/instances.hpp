#pragma once

#include <cstdint>
#include <vector>

#include "polytor/polynomial.hpp"
#include "polytor/random.hpp"

namespace polytor::harness {

/// Coefficient pattern of a generated instance. Generic draws i.i.d. complex-Gaussian coordinates;
/// the others are the adversarial corner cases.
enum class InstanceKind { generic, single_monomial, equal_coefficients, sign_pattern, basis_vectors };

/// Corner cases for i % 8 in {0, 1, 2, 3}, generic otherwise.
InstanceKind kind_for(std::size_t instance);
std::string_view to_string(InstanceKind kind) noexcept;

/// Every α in n variables with |α| = m (or |α| <= m when homogeneous is false), graded-lex order.
std::vector<MultiIndex> monomials(std::size_t n, std::uint32_t m, bool homogeneous);
/// Every A ⊆ [n] with |A| = m (or <= m).
std::vector<SubsetIndex> subsets(std::size_t n, std::uint32_t m, bool homogeneous);

/// Polynomial on a random subset of at most max_terms monomials of the given shape.
VPoly random_vpoly(const NormedSpace& space, std::size_t n, std::uint32_t m, bool homogeneous, bool tetrahedral,
                   InstanceKind kind, Rng& rng, std::size_t max_terms = 24);
WalshPoly random_walsh(const NormedSpace& space, std::size_t n, std::uint32_t m, bool homogeneous, InstanceKind kind,
                       Rng& rng, std::size_t max_terms = 32);
/// Dirichlet polynomial with `terms` distinct indices drawn from `support`.
DirichletPoly random_dirichlet(const NormedSpace& space, std::span<const std::uint64_t> support, std::size_t terms,
                               InstanceKind kind, Rng& rng);
/// Integers in [1, bound] whose prime factors all lie among the first n_primes primes.
std::vector<std::uint64_t> smooth_numbers(std::uint64_t bound, std::size_t n_primes);

/// Coefficients for `count` terms following the kind's pattern.
std::vector<Vector> coefficients(std::size_t dim, std::size_t count, InstanceKind kind, Rng& rng);

}  // namespace polytor::harness
