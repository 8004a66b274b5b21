#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "polytor/multi_index.hpp"
#include "polytor/polynomial.hpp"

namespace polytor {

enum class Parity { even, odd };

/// Where one monomial of an m-homogeneous polynomial lands: α = 2β + 2γ + 1_A with
/// A the set of odd exponents (|A| = 2k, or 2k+1 for odd m), β supported off A,
/// γ supported on A, |γ| = l − k and |β| = ⌊m/2⌋ − l.
struct ParityTerm {
  MultiIndex alpha;
  SubsetIndex odd_set;
  std::uint32_t k = 0;
  std::uint32_t l = 0;
  MultiIndex beta;
  MultiIndex gamma;
};

/// P split by exponent parity into the pieces P_{A,l}, so that
/// P(εz) = Σ_k Σ_{A ∈ 𝒜_k} ε_A Σ_l P_{A,l}(z).
class ParityDecomposition {
 public:
  using Parts = std::map<SubsetIndex, std::map<std::uint32_t, VPoly>>;

  ParityDecomposition(NormedSpace space, std::size_t n_vars, std::uint32_t degree);

  std::uint32_t degree() const noexcept { return degree_; }
  Parity parity() const noexcept { return degree_ % 2 == 0 ? Parity::even : Parity::odd; }
  std::size_t n_vars() const noexcept { return n_vars_; }
  const Parts& parts() const noexcept { return parts_; }
  /// One record per monomial of the source polynomial, in source order.
  const std::vector<ParityTerm>& assignments() const noexcept { return assignments_; }

  /// P_A = Σ_l P_{A,l}; zero polynomial if A does not occur.
  VPoly part(const SubsetIndex& odd_set) const;
  /// Σ_A Σ_l P_{A,l}.
  VPoly flatten() const;

 private:
  friend ParityDecomposition parity_decompose(const VPoly& p);

  NormedSpace space_;
  std::size_t n_vars_;
  std::uint32_t degree_;
  Parts parts_;
  std::vector<ParityTerm> assignments_;
};

/// Throws Error(not_homogeneous) unless every term has the same total degree.
ParityDecomposition parity_decompose(const VPoly& p);

/// Rebuild 2β + 2γ + 1_A from a record.
MultiIndex reassemble(const ParityTerm& term);

}  // namespace polytor
