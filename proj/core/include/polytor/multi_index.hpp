#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polytor {

/// Exponent vector α ∈ ℕ₀ⁿ with a fixed number of variables.
///
/// Only the nonzero exponents are stored, as (variable, exponent) pairs sorted by
/// variable (0-based). Bohr lifts over large prime tables have tens of thousands of
/// variables with a handful of nonzero exponents, so the dense form is produced on demand.
class MultiIndex {
 public:
  using Entry = std::pair<std::uint32_t, std::uint32_t>;

  MultiIndex() = default;
  /// The zero multi-index in n_vars variables.
  explicit MultiIndex(std::size_t n_vars) : n_vars_(n_vars) {}
  /// Dense exponents, e.g. MultiIndex{2, 1} for z₁²z₂.
  MultiIndex(std::initializer_list<std::uint32_t> exponents);

  static MultiIndex from_dense(std::span<const std::uint32_t> exponents);
  /// Entries may come in any order; zero exponents are dropped, repeated variables rejected.
  static MultiIndex from_entries(std::size_t n_vars, std::vector<Entry> entries);
  /// The tetrahedral index 1_A; members are 1-based as in SubsetIndex.
  static MultiIndex indicator(std::size_t n_vars, std::span<const std::uint32_t> members_one_based);

  std::size_t n_vars() const noexcept { return n_vars_; }
  /// |α| = Σ αᵢ.
  std::uint32_t degree() const noexcept { return degree_; }
  /// Exponent of variable i (0-based).
  std::uint32_t operator[](std::size_t i) const;
  std::span<const Entry> support() const noexcept { return entries_; }
  std::uint32_t max_exponent() const noexcept;
  bool is_tetrahedral() const noexcept { return max_exponent() <= 1; }

  std::vector<std::uint32_t> dense() const;
  void set(std::size_t i, std::uint32_t exponent);

  MultiIndex& operator+=(const MultiIndex& other);
  friend MultiIndex operator+(MultiIndex a, const MultiIndex& b) { return a += b; }
  /// 2α.
  MultiIndex doubled() const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b);

 private:
  std::size_t n_vars_ = 0;
  std::vector<Entry> entries_;
  std::uint32_t degree_ = 0;
};

/// Finite set A ⊆ [n], members 1-based and strictly increasing.
class SubsetIndex {
 public:
  SubsetIndex() = default;
  /// Throws Error(domain) unless members are strictly increasing and >= 1.
  SubsetIndex(std::initializer_list<std::uint32_t> members);
  explicit SubsetIndex(std::vector<std::uint32_t> members);
  /// Bit i (0-based) set means member i+1.
  static SubsetIndex from_mask(std::uint64_t mask);

  std::size_t size() const noexcept { return members_.size(); }
  bool empty() const noexcept { return members_.empty(); }
  std::span<const std::uint32_t> members() const noexcept { return members_; }
  bool contains(std::uint32_t member) const noexcept;
  /// Largest member, 0 for ∅.
  std::uint32_t max_member() const noexcept { return members_.empty() ? 0 : members_.back(); }
  /// Requires max_member() <= 64.
  std::uint64_t mask() const;

  std::string to_string() const;

  friend bool operator==(const SubsetIndex&, const SubsetIndex&) = default;
  friend std::strong_ordering operator<=>(const SubsetIndex& a, const SubsetIndex& b);

 private:
  std::vector<std::uint32_t> members_;
};

}  // namespace polytor
