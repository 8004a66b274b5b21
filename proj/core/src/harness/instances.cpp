#include "polytor/harness/instances.hpp"

#include <algorithm>
#include <bit>

#include "polytor/bohr.hpp"

namespace polytor::harness {

InstanceKind kind_for(std::size_t instance) {
  switch (instance % 8) {
    case 0: return InstanceKind::single_monomial;
    case 1: return InstanceKind::equal_coefficients;
    case 2: return InstanceKind::sign_pattern;
    case 3: return InstanceKind::basis_vectors;
    default: return InstanceKind::generic;
  }
}

std::string_view to_string(InstanceKind kind) noexcept {
  switch (kind) {
    case InstanceKind::generic: return "generic";
    case InstanceKind::single_monomial: return "single_monomial";
    case InstanceKind::equal_coefficients: return "equal_coefficients";
    case InstanceKind::sign_pattern: return "sign_pattern";
    case InstanceKind::basis_vectors: return "basis_vectors";
  }
  return "unknown";
}

namespace {

void monomials_rec(std::vector<std::uint32_t>& alpha, std::size_t var, std::uint32_t left, bool exact,
                   std::vector<MultiIndex>& out) {
  if (var + 1 == alpha.size()) {
    for (std::uint32_t e = exact ? left : 0; e <= left; ++e) {
      alpha[var] = e;
      out.push_back(MultiIndex::from_dense(alpha));
    }
    alpha[var] = 0;
    return;
  }
  for (std::uint32_t e = 0; e <= left; ++e) {
    alpha[var] = e;
    monomials_rec(alpha, var + 1, left - e, exact, out);
  }
  alpha[var] = 0;
}

}  // namespace

std::vector<MultiIndex> monomials(std::size_t n, std::uint32_t m, bool homogeneous) {
  std::vector<MultiIndex> out;
  if (n == 0) {
    if (m == 0 || !homogeneous) out.emplace_back(0);
    return out;
  }
  std::vector<std::uint32_t> alpha(n, 0);
  monomials_rec(alpha, 0, m, homogeneous, out);
  std::sort(out.begin(), out.end(), [](const MultiIndex& a, const MultiIndex& b) {
    return a.degree() != b.degree() ? a.degree() < b.degree() : a < b;
  });
  return out;
}

std::vector<SubsetIndex> subsets(std::size_t n, std::uint32_t m, bool homogeneous) {
  std::vector<SubsetIndex> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto size = static_cast<std::uint32_t>(std::popcount(mask));
    if (homogeneous ? size == m : size <= m) out.push_back(SubsetIndex::from_mask(mask));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Vector> coefficients(std::size_t dim, std::size_t count, InstanceKind kind, Rng& rng) {
  std::vector<Vector> out;
  out.reserve(count);
  switch (kind) {
    case InstanceKind::generic:
    case InstanceKind::single_monomial:
      for (std::size_t i = 0; i < count; ++i) out.push_back(gaussian_vector(dim, rng));
      break;
    case InstanceKind::equal_coefficients: {
      const Vector x = gaussian_vector(dim, rng);
      out.assign(count, x);
      break;
    }
    case InstanceKind::sign_pattern: {
      const Vector x = gaussian_vector(dim, rng);
      for (std::size_t i = 0; i < count; ++i) out.push_back((rng() >> 63) ? -x : x);
      break;
    }
    case InstanceKind::basis_vectors:
      for (std::size_t i = 0; i < count; ++i) {
        Vector e(dim);
        e[i % dim] = 1.0;
        out.push_back(std::move(e));
      }
      break;
  }
  return out;
}

namespace {

/// Keeps max_terms entries chosen uniformly, preserving order; a single one for single_monomial.
template <typename T>
std::vector<T> choose_support(std::vector<T> pool, std::size_t max_terms, InstanceKind kind, Rng& rng) {
  const std::size_t keep = kind == InstanceKind::single_monomial ? std::min<std::size_t>(1, pool.size())
                                                                 : std::min(max_terms, pool.size());
  // Partial Fisher–Yates on indices, then restore the pool order.
  std::vector<std::size_t> idx(pool.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  for (std::size_t i = 0; i < keep; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng() % (idx.size() - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(keep);
  std::sort(idx.begin(), idx.end());
  std::vector<T> out;
  for (auto i : idx) out.push_back(std::move(pool[i]));
  return out;
}

}  // namespace

VPoly random_vpoly(const NormedSpace& space, std::size_t n, std::uint32_t m, bool homogeneous, bool tetrahedral,
                   InstanceKind kind, Rng& rng, std::size_t max_terms) {
  std::vector<MultiIndex> pool;
  if (tetrahedral) {
    for (const auto& a : subsets(n, m, homogeneous)) {
      std::vector<std::uint32_t> members(a.members().begin(), a.members().end());
      pool.push_back(MultiIndex::indicator(n, members));
    }
  } else {
    pool = monomials(n, m, homogeneous);
  }
  VPoly p(space, n);
  const auto support = choose_support(std::move(pool), max_terms, kind, rng);
  const auto coeffs = coefficients(space.dim(), support.size(), kind, rng);
  for (std::size_t i = 0; i < support.size(); ++i) p.add_term(support[i], coeffs[i]);
  return p;
}

WalshPoly random_walsh(const NormedSpace& space, std::size_t n, std::uint32_t m, bool homogeneous, InstanceKind kind,
                       Rng& rng, std::size_t max_terms) {
  WalshPoly w(space, n);
  const auto support = choose_support(subsets(n, m, homogeneous), max_terms, kind, rng);
  const auto coeffs = coefficients(space.dim(), support.size(), kind, rng);
  for (std::size_t i = 0; i < support.size(); ++i) w.add_term(support[i], coeffs[i]);
  return w;
}

DirichletPoly random_dirichlet(const NormedSpace& space, std::span<const std::uint64_t> support, std::size_t terms,
                               InstanceKind kind, Rng& rng) {
  DirichletPoly d(space);
  const auto chosen = choose_support(std::vector<std::uint64_t>(support.begin(), support.end()), terms, kind, rng);
  const auto coeffs = coefficients(space.dim(), chosen.size(), kind, rng);
  for (std::size_t i = 0; i < chosen.size(); ++i) d.add_term(chosen[i], coeffs[i]);
  return d;
}

std::vector<std::uint64_t> smooth_numbers(std::uint64_t bound, std::size_t n_primes) {
  const auto& table = PrimeTable::shared();
  const std::uint64_t largest = n_primes == 0 ? 1 : table.prime(n_primes - 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t k = 1; k <= bound; ++k) {
    const auto f = table.factor(k);
    if (f.empty() || f.back().first <= largest) out.push_back(k);
  }
  return out;
}

}  // namespace polytor::harness
