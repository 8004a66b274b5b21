#include "polytor/parity.hpp"

#include "polytor/error.hpp"

namespace polytor {

ParityDecomposition::ParityDecomposition(NormedSpace space, std::size_t n_vars, std::uint32_t degree)
    : space_(std::move(space)), n_vars_(n_vars), degree_(degree) {}

VPoly ParityDecomposition::part(const SubsetIndex& odd_set) const {
  VPoly out(space_, n_vars_);
  auto it = parts_.find(odd_set);
  if (it == parts_.end()) return out;
  for (const auto& [l, piece] : it->second) {
    for (const auto& [alpha, v] : piece) out.add_term(alpha, v);
  }
  return out;
}

VPoly ParityDecomposition::flatten() const {
  VPoly out(space_, n_vars_);
  for (const auto& [odd_set, by_l] : parts_) {
    for (const auto& [l, piece] : by_l) {
      for (const auto& [alpha, v] : piece) out.add_term(alpha, v);
    }
  }
  return out;
}

ParityDecomposition parity_decompose(const VPoly& p) {
  const std::uint32_t m = p.empty() ? 0 : p.begin()->first.degree();
  if (!p.is_homogeneous(m)) {
    throw Error(ErrorKind::not_homogeneous, "parity decomposition needs an m-homogeneous polynomial");
  }
  ParityDecomposition out(p.space(), p.n_vars(), m);
  const std::uint32_t parity = m % 2;

  for (const auto& [alpha, v] : p) {
    ParityTerm term;
    term.alpha = alpha;
    std::vector<std::uint32_t> odd_members;
    std::vector<MultiIndex::Entry> beta_entries;
    std::vector<MultiIndex::Entry> gamma_entries;
    std::uint32_t odd_exponent_sum = 0;
    for (const auto& [var, exp] : alpha.support()) {
      if (exp % 2 == 1) {
        odd_members.push_back(var + 1);
        gamma_entries.emplace_back(var, (exp - 1) / 2);
        odd_exponent_sum += exp;
      } else {
        beta_entries.emplace_back(var, exp / 2);
      }
    }
    const auto set_size = static_cast<std::uint32_t>(odd_members.size());
    // |A| ≡ m (mod 2) because |α| = m and even exponents contribute evenly.
    term.k = (set_size - parity) / 2;
    // Σ_{i∈A} αᵢ = 2l (+1 when m is odd).
    term.l = (odd_exponent_sum - parity) / 2;
    term.odd_set = SubsetIndex(std::move(odd_members));
    term.beta = MultiIndex::from_entries(p.n_vars(), std::move(beta_entries));
    term.gamma = MultiIndex::from_entries(p.n_vars(), std::move(gamma_entries));

    auto& by_l = out.parts_[term.odd_set];
    auto it = by_l.find(term.l);
    if (it == by_l.end()) it = by_l.emplace(term.l, VPoly(p.space(), p.n_vars())).first;
    it->second.add_term(alpha, v);
    out.assignments_.push_back(std::move(term));
  }
  return out;
}

MultiIndex reassemble(const ParityTerm& term) {
  MultiIndex alpha = term.beta.doubled() + term.gamma.doubled();
  alpha += MultiIndex::indicator(alpha.n_vars(), term.odd_set.members());
  return alpha;
}

}  // namespace polytor
