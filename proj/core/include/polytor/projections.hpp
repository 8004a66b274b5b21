#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>
#include <nlohmann/json.hpp>

#include "polytor/polynomial.hpp"

namespace polytor {

/// Dense matrix of exact rationals, each kept in lowest terms.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  /// 0-based.
  mpq_class& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const mpq_class& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  bool is_symmetric() const;
  /// max |entry|.
  mpq_class max_abs() const;

  /// Entries as "num/den" strings, row-major.
  nlohmann::json to_json() const;
  static RationalMatrix from_json(const nlohmann::json& j);

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpq_class> entries_;
};

inline constexpr int kMaxHilbertOrder = 20;

/// (m+1)×(m+1) matrix with H_ij = 1/(i+j−1), 1-based.
RationalMatrix hilbert_matrix(int m);
/// Exact H⁻¹ by rational Gauss–Jordan elimination. Throws Error(guard_exceeded) for m > 20.
RationalMatrix hilbert_inverse(int m);

/// p(t) = Σ_k coeffs[k] t^k with exact rational coefficients.
class ProjectionPolynomial {
 public:
  explicit ProjectionPolynomial(std::vector<mpq_class> coeffs) : coeffs_(std::move(coeffs)) {}

  const std::vector<mpq_class>& coeffs() const noexcept { return coeffs_; }
  std::size_t degree_bound() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
  /// ∫₀¹ t^i p(t) dt, exactly.
  mpq_class moment(std::size_t i) const;
  double eval(double t) const;
  /// max |p(t)| over `points` interior points of (0, 1); a lower bound for the sup.
  double sup_on_grid(std::size_t points) const;

 private:
  std::vector<mpq_class> coeffs_;
};

/// p_1..p_{m+1} with p_j(t) = Σ_k a_kj t^{k−1}, A = H⁻¹; returned 0-based (result[j−1] = p_j).
std::vector<ProjectionPolynomial> projection_polynomials(int m);

/// Terms with |A| = k.
WalshPoly walsh_homog_filter(const WalshPoly& w, std::uint32_t k);

/// w_j = ∫₀¹ t^j p_{k+1}(t) dt for j = 0..m. Biorthogonality makes this the indicator of j = k.
std::vector<mpq_class> lemma3_weights(std::uint32_t k, int m);

/// ∫₀¹ W(tε) p_{k+1}(t) dt, evaluated symbolically: the degree-j part of W picks up the factor t^j,
/// so the result is Σ_j w_j·(degree-j part). Requires degree(W) <= m <= 20.
WalshPoly lemma3_projection(const WalshPoly& w, std::uint32_t k, int m);

/// (m+1)·max|a_ij| for A = H⁻¹ of order m.
double lemma3_envelope(int m);
/// max_{1<=j<=m} envelope(j)^{1/j}: a base B with envelope(j) <= B^j for all j <= m.
double lemma3_base(int m);

/// Lower bound on the norm of the degree-m Rademacher projection on L₂({−1,1}ⁿ, X):
/// best ratio ‖P_m W‖/‖W‖ over random W, each refined by coefficient hill-climbing.
/// Requires n <= 24. Deterministic in seed regardless of jobs.
double rademacher_projection_norm(const NormedSpace& space, std::size_t n, std::uint32_t m, std::size_t trials,
                                  std::uint64_t seed, unsigned jobs = 1);

}  // namespace polytor
