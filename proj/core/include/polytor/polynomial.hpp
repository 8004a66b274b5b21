#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "polytor/multi_index.hpp"
#include "polytor/spaces.hpp"

namespace polytor {

/// Finitely supported coefficient map, index → vector of a fixed space.
/// Zero vectors are never stored, so equality of maps is equality of polynomials.
template <typename Index>
class SparseCoefficients {
 public:
  using Terms = std::map<Index, Vector>;

  explicit SparseCoefficients(NormedSpace space) : space_(std::move(space)) {}

  const NormedSpace& space() const noexcept { return space_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  auto begin() const noexcept { return terms_.begin(); }
  auto end() const noexcept { return terms_.end(); }

  /// nullptr when the index is outside the support.
  const Vector* coefficient(const Index& index) const {
    auto it = terms_.find(index);
    return it == terms_.end() ? nullptr : &it->second;
  }

 protected:
  void accumulate(const Index& index, const Vector& v);
  void assign(const Index& index, Vector v);

  NormedSpace space_;
  Terms terms_;
};

/// X-valued polynomial Σ x_α z^α in a fixed number of variables.
class VPoly : public SparseCoefficients<MultiIndex> {
 public:
  VPoly(NormedSpace space, std::size_t n_vars) : SparseCoefficients(std::move(space)), n_vars_(n_vars) {}

  std::size_t n_vars() const noexcept { return n_vars_; }
  /// Adds v to the coefficient at alpha; the entry disappears if the sum is zero.
  void add_term(const MultiIndex& alpha, const Vector& v);
  /// max |α| over the support, 0 for the zero polynomial.
  std::uint32_t degree() const noexcept;
  /// Largest exponent of any single variable.
  std::uint32_t max_variable_degree() const noexcept;
  /// True iff every term has |α| = m (vacuously true for the zero polynomial).
  bool is_homogeneous(std::uint32_t m) const noexcept;
  /// 0-based variables that occur in some term, ascending.
  std::vector<std::uint32_t> active_variables() const;

  nlohmann::json to_json() const;
  static VPoly from_json(const nlohmann::json& j, const NormedSpace& space);

  friend bool operator==(const VPoly& a, const VPoly& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_vars_;
};

/// X-valued Walsh polynomial Σ x_A ε_A with A ⊆ [n_vars].
class WalshPoly : public SparseCoefficients<SubsetIndex> {
 public:
  WalshPoly(NormedSpace space, std::size_t n_vars) : SparseCoefficients(std::move(space)), n_vars_(n_vars) {}

  std::size_t n_vars() const noexcept { return n_vars_; }
  void add_term(const SubsetIndex& subset, const Vector& v);
  /// max |A| over the support.
  std::uint32_t degree() const noexcept;

  nlohmann::json to_json() const;
  static WalshPoly from_json(const nlohmann::json& j, const NormedSpace& space);

  friend bool operator==(const WalshPoly& a, const WalshPoly& b) {
    return a.n_vars_ == b.n_vars_ && a.terms_ == b.terms_;
  }

 private:
  std::size_t n_vars_;
};

/// X-valued Dirichlet polynomial Σ a_n n^{-s}, n >= 1.
class DirichletPoly : public SparseCoefficients<std::uint64_t> {
 public:
  explicit DirichletPoly(NormedSpace space) : SparseCoefficients(std::move(space)) {}

  void add_term(std::uint64_t n, const Vector& v);
  /// Largest index in the support, 0 when empty.
  std::uint64_t max_index() const noexcept { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  nlohmann::json to_json() const;
  static DirichletPoly from_json(const nlohmann::json& j, const NormedSpace& space);

  friend bool operator==(const DirichletPoly& a, const DirichletPoly& b) { return a.terms_ == b.terms_; }
};

/// Terms with |α| = m.
VPoly homogeneous_part(const VPoly& p, std::uint32_t m);
/// Every exponent is at most 1.
bool is_tetrahedral(const VPoly& p) noexcept;
/// x_α z^α ↦ x_A ε_A with A = {i : αᵢ = 1}. Throws Error(not_tetrahedral).
WalshPoly tetra_to_walsh(const VPoly& p);
VPoly walsh_to_tetra(const WalshPoly& w);
/// Coefficients of z ↦ P(εz): x_α ↦ ε^α x_α for a sign vector ε.
VPoly reflect(const VPoly& p, std::span<const int> signs);

/// JSON codec for a coefficient: [[re, im], ...].
nlohmann::json vector_to_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j, std::size_t dim);

}  // namespace polytor
