#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "polytor/multi_index.hpp"
#include "polytor/polynomial.hpp"

namespace polytor {

/// Primes up to a sieve bound, with a smallest-prime-factor table for exact factorisation.
class PrimeTable {
 public:
  static constexpr std::uint64_t kDefaultBound = 1'000'000;

  explicit PrimeTable(std::uint64_t sieve_bound = kDefaultBound);

  /// Built once on first use with the default bound.
  static const PrimeTable& shared();

  std::uint64_t sieve_bound() const noexcept { return bound_; }
  std::size_t count() const noexcept { return primes_.size(); }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  /// k-th prime, 0-based (prime(0) = 2).
  std::uint64_t prime(std::size_t k) const;
  /// 0-based position of p in the table, if p is a tabulated prime.
  std::optional<std::size_t> index_of(std::uint64_t p) const noexcept;
  /// Number of tabulated primes <= x.
  std::size_t count_up_to(std::uint64_t x) const noexcept;

  /// Prime factorisation as ascending (prime, multiplicity) pairs. Exact for n <= bound²;
  /// throws Error(guard_exceeded) beyond that.
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factor(std::uint64_t n) const;

 private:
  std::uint64_t bound_;
  std::vector<std::uint64_t> primes_;
  std::vector<std::uint32_t> smallest_factor_;
};

/// α with n = Π pᵢ^{αᵢ} over the first n_primes primes.
/// Throws PrimeOutOfTableError naming the first prime factor outside that range.
MultiIndex factorize(std::uint64_t n, std::size_t n_primes, const PrimeTable& table = PrimeTable::shared());

/// Ω(n): prime factors counted with multiplicity.
std::uint32_t omega(std::uint64_t n, const PrimeTable& table = PrimeTable::shared());

/// Bohr lift: the coefficient at α is a_n for n = Π pᵢ^{αᵢ}.
VPoly bohr_lift(const DirichletPoly& d, std::size_t n_primes, const PrimeTable& table = PrimeTable::shared());

/// Inverse of bohr_lift. Throws Error(overflow) if an index does not fit in 64 bits.
DirichletPoly bohr_push(const VPoly& p, const PrimeTable& table = PrimeTable::shared());

}  // namespace polytor
