#include "polytor/polynomial.hpp"

#include <algorithm>
#include <set>

#include "polytor/error.hpp"

namespace polytor {

template <typename Index>
void SparseCoefficients<Index>::accumulate(const Index& index, const Vector& v) {
  if (v.size() != space_.dim()) {
    throw Error(ErrorKind::dimension_mismatch, "coefficient of length " + std::to_string(v.size()) +
                                                   " for space of dimension " + std::to_string(space_.dim()));
  }
  auto it = terms_.find(index);
  if (it == terms_.end()) {
    if (!v.is_zero()) terms_.emplace(index, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) terms_.erase(it);
}

template <typename Index>
void SparseCoefficients<Index>::assign(const Index& index, Vector v) {
  if (v.is_zero()) {
    terms_.erase(index);
  } else {
    terms_.insert_or_assign(index, std::move(v));
  }
}

template class SparseCoefficients<MultiIndex>;
template class SparseCoefficients<SubsetIndex>;
template class SparseCoefficients<std::uint64_t>;

void VPoly::add_term(const MultiIndex& alpha, const Vector& v) {
  if (alpha.n_vars() != n_vars_) {
    throw Error(ErrorKind::dimension_mismatch, "multi-index with " + std::to_string(alpha.n_vars()) +
                                                   " variables in a polynomial of " +
                                                   std::to_string(n_vars_));
  }
  accumulate(alpha, v);
}

std::uint32_t VPoly::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [alpha, _] : terms_) d = std::max(d, alpha.degree());
  return d;
}

std::uint32_t VPoly::max_variable_degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [alpha, _] : terms_) d = std::max(d, alpha.max_exponent());
  return d;
}

bool VPoly::is_homogeneous(std::uint32_t m) const noexcept {
  return std::all_of(terms_.begin(), terms_.end(), [m](const auto& t) { return t.first.degree() == m; });
}

std::vector<std::uint32_t> VPoly::active_variables() const {
  std::set<std::uint32_t> vars;
  for (const auto& [alpha, _] : terms_) {
    for (const auto& [var, exp] : alpha.support()) vars.insert(var);
  }
  return {vars.begin(), vars.end()};
}

void WalshPoly::add_term(const SubsetIndex& subset, const Vector& v) {
  if (subset.max_member() > n_vars_) {
    throw Error(ErrorKind::dimension_mismatch,
                "subset " + subset.to_string() + " outside [" + std::to_string(n_vars_) + "]");
  }
  accumulate(subset, v);
}

std::uint32_t WalshPoly::degree() const noexcept {
  std::uint32_t d = 0;
  for (const auto& [subset, _] : terms_) d = std::max<std::uint32_t>(d, static_cast<std::uint32_t>(subset.size()));
  return d;
}

void DirichletPoly::add_term(std::uint64_t n, const Vector& v) {
  if (n == 0) throw Error(ErrorKind::domain, "Dirichlet indices start at 1");
  accumulate(n, v);
}

nlohmann::json vector_to_json(const Vector& v) {
  auto arr = nlohmann::json::array();
  for (const auto& c : v) arr.push_back({c.real(), c.imag()});
  return arr;
}

Vector vector_from_json(const nlohmann::json& j, std::size_t dim) {
  if (!j.is_array() || j.size() != dim) {
    throw Error(ErrorKind::dimension_mismatch, "coefficient must be an array of " + std::to_string(dim) + " pairs");
  }
  Vector v(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    const auto& c = j[i];
    if (c.is_number()) {
      v[i] = Complex(c.get<double>(), 0.0);
    } else if (c.is_array() && c.size() == 2) {
      v[i] = Complex(c[0].get<double>(), c[1].get<double>());
    } else {
      throw Error(ErrorKind::config, "coefficient entries are [re, im] pairs");
    }
  }
  return v;
}

nlohmann::json VPoly::to_json() const {
  nlohmann::json j;
  j["n_vars"] = n_vars_;
  j["terms"] = nlohmann::json::array();
  for (const auto& [alpha, v] : terms_) {
    j["terms"].push_back({{"alpha", alpha.dense()}, {"coeff", vector_to_json(v)}});
  }
  return j;
}

VPoly VPoly::from_json(const nlohmann::json& j, const NormedSpace& space) {
  VPoly p(space, j.at("n_vars").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    const auto exps = t.at("alpha").get<std::vector<std::uint32_t>>();
    if (exps.size() != p.n_vars()) throw Error(ErrorKind::dimension_mismatch, "alpha length differs from n_vars");
    p.add_term(MultiIndex::from_dense(exps), vector_from_json(t.at("coeff"), space.dim()));
  }
  return p;
}

nlohmann::json WalshPoly::to_json() const {
  nlohmann::json j;
  j["n_vars"] = n_vars_;
  j["terms"] = nlohmann::json::array();
  for (const auto& [subset, v] : terms_) {
    std::vector<std::uint32_t> members(subset.members().begin(), subset.members().end());
    j["terms"].push_back({{"A", members}, {"coeff", vector_to_json(v)}});
  }
  return j;
}

WalshPoly WalshPoly::from_json(const nlohmann::json& j, const NormedSpace& space) {
  WalshPoly w(space, j.at("n_vars").get<std::size_t>());
  for (const auto& t : j.at("terms")) {
    w.add_term(SubsetIndex(t.at("A").get<std::vector<std::uint32_t>>()),
               vector_from_json(t.at("coeff"), space.dim()));
  }
  return w;
}

nlohmann::json DirichletPoly::to_json() const {
  nlohmann::json j;
  j["n_vars"] = nullptr;
  j["terms"] = nlohmann::json::array();
  for (const auto& [n, v] : terms_) j["terms"].push_back({{"n", n}, {"coeff", vector_to_json(v)}});
  return j;
}

DirichletPoly DirichletPoly::from_json(const nlohmann::json& j, const NormedSpace& space) {
  DirichletPoly d(space);
  for (const auto& t : j.at("terms")) {
    d.add_term(t.at("n").get<std::uint64_t>(), vector_from_json(t.at("coeff"), space.dim()));
  }
  return d;
}

VPoly homogeneous_part(const VPoly& p, std::uint32_t m) {
  VPoly out(p.space(), p.n_vars());
  for (const auto& [alpha, v] : p) {
    if (alpha.degree() == m) out.add_term(alpha, v);
  }
  return out;
}

bool is_tetrahedral(const VPoly& p) noexcept {
  return std::all_of(p.begin(), p.end(), [](const auto& t) { return t.first.is_tetrahedral(); });
}

WalshPoly tetra_to_walsh(const VPoly& p) {
  WalshPoly w(p.space(), p.n_vars());
  for (const auto& [alpha, v] : p) {
    if (!alpha.is_tetrahedral()) {
      throw Error(ErrorKind::not_tetrahedral, "exponent above 1 in " + alpha.to_string());
    }
    std::vector<std::uint32_t> members;
    members.reserve(alpha.support().size());
    for (const auto& [var, exp] : alpha.support()) members.push_back(var + 1);
    w.add_term(SubsetIndex(std::move(members)), v);
  }
  return w;
}

VPoly walsh_to_tetra(const WalshPoly& w) {
  VPoly p(w.space(), w.n_vars());
  for (const auto& [subset, v] : w) p.add_term(MultiIndex::indicator(w.n_vars(), subset.members()), v);
  return p;
}

VPoly reflect(const VPoly& p, std::span<const int> signs) {
  if (signs.size() != p.n_vars()) throw Error(ErrorKind::dimension_mismatch, "sign vector length");
  VPoly out(p.space(), p.n_vars());
  for (const auto& [alpha, v] : p) {
    int s = 1;
    for (const auto& [var, exp] : alpha.support()) {
      if (signs[var] < 0 && (exp % 2 == 1)) s = -s;
    }
    out.add_term(alpha, s > 0 ? v : -v);
  }
  return out;
}

}  // namespace polytor
