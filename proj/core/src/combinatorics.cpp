#include "polytor/combinatorics.hpp"

#include <bit>
#include <string>

#include "polytor/error.hpp"

namespace polytor {

mpz_class binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

namespace {

void require_range(int n, int m, int k) {
  if (n < 1 || m < 1 || k < 1 || m > n || k > n) {
    throw Error(ErrorKind::domain, "need 1 <= m, k <= n; got n=" + std::to_string(n) +
                                       " m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
  if (n > 20) throw Error(ErrorKind::guard_exceeded, "subset enumeration limited to n <= 20");
}

}  // namespace

IdentityCounts combinatorial_identity_check(int n, int m, int k) {
  require_range(n, m, k);
  const std::uint32_t full = (std::uint32_t{1} << n);
  const std::uint32_t first_a = (std::uint32_t{1} << m) - 1;

  std::vector<std::uint32_t> b_sets;
  for (std::uint32_t b = 0; b < full; ++b) {
    if (std::popcount(b) == k) b_sets.push_back(b);
  }
  auto count_for = [&b_sets](std::uint32_t a) {
    std::uint64_t c = 0;
    for (auto b : b_sets) c += (std::popcount(a & b) == 1);
    return c;
  };

  IdentityCounts out;
  out.count_lhs = count_for(first_a);
  out.count_rhs = mpz_class(mpz_class(m) * binomial(n - m, k - 1)).get_ui();
  out.all_subsets_agree = true;
  for (std::uint32_t a = 0; a < full; ++a) {
    if (std::popcount(a) == m && count_for(a) != out.count_rhs) {
      out.all_subsets_agree = false;
      break;
    }
  }
  return out;
}

mpz_class subset_triple_sum(int n, int m, int k, std::span<const long> values_by_mask) {
  require_range(n, m, k);
  const std::uint32_t full = (std::uint32_t{1} << n);
  if (values_by_mask.size() != full) throw Error(ErrorKind::dimension_mismatch, "need 2^n values");
  mpz_class total = 0;
  for (std::uint32_t b = 0; b < full; ++b) {
    if (std::popcount(b) != k) continue;
    const std::uint32_t complement = (full - 1) & ~b;
    for (int i = 0; i < n; ++i) {
      const std::uint32_t a1 = std::uint32_t{1} << i;
      if (!(b & a1)) continue;
      // Enumerate A₂ ⊆ Bᶜ with |A₂| = m − 1 as submasks of the complement.
      for (std::uint32_t a2 = complement;; a2 = (a2 - 1) & complement) {
        if (std::popcount(a2) == m - 1) total += values_by_mask[a1 | a2];
        if (a2 == 0) break;
      }
    }
  }
  return total;
}

mpz_class subset_weighted_total(int n, int m, int k, std::span<const long> values_by_mask) {
  require_range(n, m, k);
  const std::uint32_t full = (std::uint32_t{1} << n);
  if (values_by_mask.size() != full) throw Error(ErrorKind::dimension_mismatch, "need 2^n values");
  mpz_class sum = 0;
  for (std::uint32_t a = 0; a < full; ++a) {
    if (std::popcount(a) == m) sum += values_by_mask[a];
  }
  return mpz_class(m) * binomial(n - m, k - 1) * sum;
}

mpq_class stirling_ratio_exact(int n, int m, int k) {
  if (m < 1 || k < 1 || n != k * m) {
    throw Error(ErrorKind::domain, "stirling ratio needs n = k*m with k, m >= 1; got n=" + std::to_string(n) +
                                       " m=" + std::to_string(m) + " k=" + std::to_string(k));
  }
  mpq_class ratio(binomial(n, k), mpz_class(m) * binomial(n - m, k - 1));
  ratio.canonicalize();
  return ratio;
}

double stirling_ratio(int n, int m, int k) { return stirling_ratio_exact(n, m, k).get_d(); }

}  // namespace polytor
