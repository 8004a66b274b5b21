#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace polytor {

/// Exact binomial coefficient; 0 when k > n or k < 0.
mpz_class binomial(long n, long k);

struct IdentityCounts {
  /// |{B ⊆ [n] : |B| = k, |A ∩ B| = 1}| for A = {1, ..., m}, by enumeration.
  std::uint64_t count_lhs = 0;
  /// m · C(n − m, k − 1).
  std::uint64_t count_rhs = 0;
  /// Every m-subset A of [n] gave the same enumerated count as count_rhs.
  bool all_subsets_agree = false;
};

/// Brute-force check of the double-counting identity behind the subset averaging argument.
/// Requires 1 <= m, k <= n <= 20; throws Error(domain) otherwise.
IdentityCounts combinatorial_identity_check(int n, int m, int k);

/// Left side Σ_{|B|=k} Σ_{A₁⊆B,|A₁|=1} Σ_{A₂⊆Bᶜ,|A₂|=m−1} v_{A₁∪A₂} for values indexed by subset mask
/// (entries for masks of popcount other than m are ignored).
mpz_class subset_triple_sum(int n, int m, int k, std::span<const long> values_by_mask);
/// Right side m · C(n − m, k − 1) · Σ_{|A|=m} v_A.
mpz_class subset_weighted_total(int n, int m, int k, std::span<const long> values_by_mask);

/// C(n, k) / (m · C(n − m, k − 1)) with n = k·m, exactly. Throws Error(domain) if n ≠ k·m.
mpq_class stirling_ratio_exact(int n, int m, int k);
double stirling_ratio(int n, int m, int k);

}  // namespace polytor
