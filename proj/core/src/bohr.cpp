#include "polytor/bohr.hpp"

#include <algorithm>
#include <limits>

#include "polytor/error.hpp"

namespace polytor {

PrimeTable::PrimeTable(std::uint64_t sieve_bound) : bound_(std::max<std::uint64_t>(sieve_bound, 2)) {
  if (bound_ > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(ErrorKind::guard_exceeded, "sieve bound must fit in 32 bits");
  }
  smallest_factor_.assign(bound_ + 1, 0);
  for (std::uint64_t i = 2; i <= bound_; ++i) {
    if (smallest_factor_[i] == 0) {
      primes_.push_back(i);
      smallest_factor_[i] = static_cast<std::uint32_t>(i);
    }
    for (auto p : primes_) {
      if (p > smallest_factor_[i] || i * p > bound_) break;
      smallest_factor_[i * p] = static_cast<std::uint32_t>(p);
    }
  }
}

const PrimeTable& PrimeTable::shared() {
  static const PrimeTable table;
  return table;
}

std::uint64_t PrimeTable::prime(std::size_t k) const {
  if (k >= primes_.size()) {
    throw Error(ErrorKind::guard_exceeded, "prime #" + std::to_string(k + 1) + " beyond the sieve bound " +
                                               std::to_string(bound_));
  }
  return primes_[k];
}

std::optional<std::size_t> PrimeTable::index_of(std::uint64_t p) const noexcept {
  auto it = std::lower_bound(primes_.begin(), primes_.end(), p);
  if (it == primes_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - primes_.begin());
}

std::size_t PrimeTable::count_up_to(std::uint64_t x) const noexcept {
  return static_cast<std::size_t>(std::upper_bound(primes_.begin(), primes_.end(), x) - primes_.begin());
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> PrimeTable::factor(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorKind::domain, "cannot factor 0");
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  auto push = [&out](std::uint64_t p) {
    if (!out.empty() && out.back().first == p) {
      ++out.back().second;
    } else {
      out.emplace_back(p, 1);
    }
  };
  if (n > bound_) {
    bool certified_prime = false;
    for (auto p : primes_) {
      if (p * p > n) {
        certified_prime = true;
        break;
      }
      while (n % p == 0) {
        push(p);
        n /= p;
      }
      if (n <= bound_) break;
    }
    if (n > bound_) {
      if (!certified_prime) {
        throw Error(ErrorKind::guard_exceeded, "cannot certify factorisation beyond the square of the sieve bound");
      }
      push(n);
      return out;
    }
  }
  while (n > 1) {
    const auto p = smallest_factor_[n];
    push(p);
    n /= p;
  }
  return out;
}

MultiIndex factorize(std::uint64_t n, std::size_t n_primes, const PrimeTable& table) {
  std::vector<MultiIndex::Entry> entries;
  for (const auto& [p, mult] : table.factor(n)) {
    const auto idx = table.index_of(p);
    if (!idx || *idx >= n_primes) throw PrimeOutOfTableError(p, n_primes);
    entries.emplace_back(static_cast<std::uint32_t>(*idx), mult);
  }
  return MultiIndex::from_entries(n_primes, std::move(entries));
}

std::uint32_t omega(std::uint64_t n, const PrimeTable& table) {
  std::uint32_t total = 0;
  for (const auto& [p, mult] : table.factor(n)) total += mult;
  return total;
}

VPoly bohr_lift(const DirichletPoly& d, std::size_t n_primes, const PrimeTable& table) {
  VPoly p(d.space(), n_primes);
  for (const auto& [n, v] : d) p.add_term(factorize(n, n_primes, table), v);
  return p;
}

DirichletPoly bohr_push(const VPoly& p, const PrimeTable& table) {
  DirichletPoly d(p.space());
  for (const auto& [alpha, v] : p) {
    std::uint64_t n = 1;
    for (const auto& [var, exp] : alpha.support()) {
      const auto prime = table.prime(var);
      for (std::uint32_t e = 0; e < exp; ++e) {
        if (n > std::numeric_limits<std::uint64_t>::max() / prime) {
          throw Error(ErrorKind::overflow, "index of " + alpha.to_string() + " exceeds 64 bits");
        }
        n *= prime;
      }
    }
    d.add_term(n, v);
  }
  return d;
}

}  // namespace polytor
