#include "polytor/multi_index.hpp"

#include <algorithm>
#include <sstream>

#include "polytor/error.hpp"

namespace polytor {

MultiIndex::MultiIndex(std::initializer_list<std::uint32_t> exponents)
    : MultiIndex(from_dense(std::span<const std::uint32_t>(exponents.begin(), exponents.size()))) {}

MultiIndex MultiIndex::from_dense(std::span<const std::uint32_t> exponents) {
  MultiIndex alpha(exponents.size());
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] != 0) {
      alpha.entries_.emplace_back(static_cast<std::uint32_t>(i), exponents[i]);
      alpha.degree_ += exponents[i];
    }
  }
  return alpha;
}

MultiIndex MultiIndex::from_entries(std::size_t n_vars, std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end());
  MultiIndex alpha(n_vars);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [var, exp] = entries[i];
    if (var >= n_vars) {
      throw Error(ErrorKind::dimension_mismatch,
                  "variable " + std::to_string(var) + " outside " + std::to_string(n_vars) + " variables");
    }
    if (i > 0 && entries[i - 1].first == var) {
      throw Error(ErrorKind::domain, "variable " + std::to_string(var) + " repeated");
    }
    if (exp == 0) continue;
    alpha.entries_.emplace_back(var, exp);
    alpha.degree_ += exp;
  }
  return alpha;
}

MultiIndex MultiIndex::indicator(std::size_t n_vars, std::span<const std::uint32_t> members_one_based) {
  std::vector<Entry> entries;
  entries.reserve(members_one_based.size());
  for (auto m : members_one_based) {
    if (m == 0) throw Error(ErrorKind::domain, "subset members are 1-based");
    entries.emplace_back(m - 1, 1);
  }
  return from_entries(n_vars, std::move(entries));
}

std::uint32_t MultiIndex::operator[](std::size_t i) const {
  if (i >= n_vars_) throw Error(ErrorKind::dimension_mismatch, "multi-index variable out of range");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t v) { return e.first < v; });
  return (it != entries_.end() && it->first == i) ? it->second : 0;
}

std::uint32_t MultiIndex::max_exponent() const noexcept {
  std::uint32_t m = 0;
  for (const auto& e : entries_) m = std::max(m, e.second);
  return m;
}

std::vector<std::uint32_t> MultiIndex::dense() const {
  std::vector<std::uint32_t> out(n_vars_, 0);
  for (const auto& [var, exp] : entries_) out[var] = exp;
  return out;
}

void MultiIndex::set(std::size_t i, std::uint32_t exponent) {
  if (i >= n_vars_) throw Error(ErrorKind::dimension_mismatch, "multi-index variable out of range");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, std::size_t v) { return e.first < v; });
  if (it != entries_.end() && it->first == i) {
    degree_ -= it->second;
    if (exponent == 0) {
      entries_.erase(it);
    } else {
      it->second = exponent;
      degree_ += exponent;
    }
  } else if (exponent != 0) {
    entries_.insert(it, Entry{static_cast<std::uint32_t>(i), exponent});
    degree_ += exponent;
  }
}

MultiIndex& MultiIndex::operator+=(const MultiIndex& other) {
  if (other.n_vars_ != n_vars_) throw Error(ErrorKind::dimension_mismatch, "multi-index sum");
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      merged.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  degree_ += other.degree_;
  return *this;
}

MultiIndex MultiIndex::doubled() const {
  MultiIndex out = *this;
  for (auto& e : out.entries_) e.second *= 2;
  out.degree_ *= 2;
  return out;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  const auto d = dense();
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? "," : "") << d[i];
  os << ')';
  return os.str();
}

std::strong_ordering operator<=>(const MultiIndex& a, const MultiIndex& b) {
  if (auto c = a.n_vars_ <=> b.n_vars_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(),
                                                b.entries_.begin(), b.entries_.end());
}

SubsetIndex::SubsetIndex(std::initializer_list<std::uint32_t> members)
    : SubsetIndex(std::vector<std::uint32_t>(members)) {}

SubsetIndex::SubsetIndex(std::vector<std::uint32_t> members) : members_(std::move(members)) {
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] == 0) throw Error(ErrorKind::domain, "subset members are 1-based");
    if (i > 0 && members_[i] <= members_[i - 1]) {
      throw Error(ErrorKind::domain, "subset members must be strictly increasing");
    }
  }
}

SubsetIndex SubsetIndex::from_mask(std::uint64_t mask) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < 64; ++i) {
    if (mask & (std::uint64_t{1} << i)) members.push_back(i + 1);
  }
  return SubsetIndex(std::move(members));
}

bool SubsetIndex::contains(std::uint32_t member) const noexcept {
  return std::binary_search(members_.begin(), members_.end(), member);
}

std::uint64_t SubsetIndex::mask() const {
  std::uint64_t m = 0;
  for (auto i : members_) {
    if (i > 64) throw Error(ErrorKind::guard_exceeded, "subset mask needs members <= 64");
    m |= std::uint64_t{1} << (i - 1);
  }
  return m;
}

std::string SubsetIndex::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) os << (i ? "," : "") << members_[i];
  os << '}';
  return os.str();
}

std::strong_ordering operator<=>(const SubsetIndex& a, const SubsetIndex& b) {
  // Graded order: by cardinality first, then lexicographically.
  if (auto c = a.members_.size() <=> b.members_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.members_.begin(), a.members_.end(),
                                                b.members_.begin(), b.members_.end());
}

}  // namespace polytor
