#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "polytor/polynomial.hpp"

namespace polytor {

enum class EstimateMethod { parseval, grid, mc, cube_exact, cube_mc, sup_grid, coefficient_sum, exact };
enum class EstimateError { exact, ci, grid_gap_unknown };
enum class SupDomain { torus, cube, box };

/// Result of any norm or expectation computation, labelled with how it was obtained.
struct NormEstimate {
  double value = 0.0;
  EstimateMethod method = EstimateMethod::exact;
  EstimateError error = EstimateError::exact;
  /// Confidence-interval halfwidth (error == ci).
  double halfwidth = 0.0;
  double level = 0.0;
  /// Advisory |grid(M) − grid(M+1)| for grid estimates whose gap is unknown; 0 if not measured.
  double gap_estimate = 0.0;
  std::uint32_t grid_points = 0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  std::optional<SupDomain> domain;

  /// Error used when comparing against other estimates: 0, the CI halfwidth, or the gap estimate.
  double error_bound() const noexcept;
  nlohmann::json to_json() const;

  static NormEstimate exact_value(double value, EstimateMethod method = EstimateMethod::exact);
};

struct SamplerSpec {
  std::uint64_t seed = 0;
  std::uint64_t samples = 10'000;
  std::uint32_t grid_points = 8;
};

inline constexpr std::uint64_t kMaxGridPoints = 100'000'000;
inline constexpr std::size_t kMaxCubeVars = 24;
inline constexpr std::uint64_t kMinMcSamples = 100;
inline constexpr std::uint64_t kMcBlockSize = 4096;
inline constexpr double kCiLevel = 0.99;
/// Two-sided standard normal quantile for kCiLevel.
inline constexpr double kCiZ = 2.5758293035489004;

std::string_view to_string(EstimateMethod method) noexcept;
std::string_view to_string(EstimateError error) noexcept;
std::string_view to_string(SupDomain domain) noexcept;

/// Σ x_α z^α at an arbitrary point of ℂⁿ.
Vector evaluate(const VPoly& p, std::span<const Complex> z);
/// As evaluate, but requires |zᵢ| = 1 within 1e-12 (Error(domain)).
Vector eval_at(const VPoly& p, std::span<const Complex> z);
/// Σ x_A ε_A at a sign vector.
Vector evaluate(const WalshPoly& w, std::span<const int> signs);

/// sqrt(Σ ‖x_α‖²); exact on Hilbert spaces, Error(not_euclidean) otherwise.
NormEstimate l2_parseval(const VPoly& p);

/// ((1/Mʳ) Σ_grid ‖P(z)‖^q)^{1/q} over M-th roots of unity in each of the r active variables.
/// Exact when the space is Hilbert, q is an even integer and M > q·max_variable_degree.
/// Throws Error(budget_exceeded) if Mʳ > kMaxGridPoints.
NormEstimate lq_norm_grid(const VPoly& p, double q, std::uint32_t grid_points);

/// Monte Carlo over i.i.d. uniform points of the torus, 99% CI via the delta method.
/// Samples come in fixed blocks keyed by (seed, block), so results are reproducible bit for bit.
NormEstimate lq_norm_mc(const VPoly& p, double q, const SamplerSpec& spec);

/// (2^{-r} Σ_ε ‖W(ε)‖^q)^{1/q} by exhaustive enumeration of the r active variables.
/// Throws Error(budget_exceeded) for r > kMaxCubeVars.
NormEstimate cube_lq_exact(const WalshPoly& w, double q);
NormEstimate cube_lq_mc(const WalshPoly& w, double q, const SamplerSpec& spec);

/// Max of ‖P‖ over a finite grid: roots of unity (torus), {−1,1}ʳ (cube, M ignored) or
/// M equispaced points of [−1,1] per variable (box). A lower bound for the true sup.
NormEstimate sup_grid(const VPoly& p, std::uint32_t grid_points, SupDomain domain);

/// ‖P(z)‖ at every point of the roots-of-unity grid over the active variables.
std::vector<double> torus_grid_norms(const VPoly& p, std::uint32_t grid_points);
/// Same grid, with each listed polynomial evaluated at the same points (all must share n_vars
/// and space). The grid spans the union of their active variables. Result[i][point].
std::vector<std::vector<double>> torus_grid_norms(std::span<const VPoly> polys, std::uint32_t grid_points);
/// ‖W(ε)‖ for every sign pattern of the active variables, via fast Walsh–Hadamard transform
/// (use_fwht) or term-by-term evaluation.
std::vector<double> cube_norms(const WalshPoly& w, bool use_fwht = true);
/// Values W(ε) over the active variables; pattern bit j set means ε = −1 on the j-th active variable.
std::vector<Vector> cube_values(const WalshPoly& w, bool use_fwht);

/// ((1/N) Σ v^q)^{1/q}.
double power_mean(std::span<const double> values, double q);
/// Criterion under which lq_norm_grid is exact.
bool grid_is_exact(const VPoly& p, double q, std::uint32_t grid_points);

/// Policy for estimators that pick grid or Monte Carlo on their own.
struct AutoNormOptions {
  std::uint64_t max_grid_points = std::uint64_t{1} << 21;
  std::uint32_t min_grid_points = 8;
  std::uint64_t mc_samples = 20'000;
  std::uint64_t seed = 0;
  bool estimate_gap = true;
};

/// Grid size to use for p under opts, or 0 when even the smallest acceptable grid is too large.
std::uint32_t choose_grid_points(const VPoly& p, double q, const AutoNormOptions& opts);
/// Same policy from the shape alone: r active variables, per-variable degree d, largest exponent q,
/// and whether the exactness criterion can apply at all (Hilbert space, every q even).
std::uint32_t choose_grid_points(std::size_t r, std::uint32_t d, double q, bool exact_possible,
                                 const AutoNormOptions& opts);
/// Parseval for q = 2 on Hilbert spaces, else grid when affordable (gap measured against M+1),
/// else Monte Carlo.
NormEstimate lq_norm_auto(const VPoly& p, double q, const AutoNormOptions& opts);

/// result[i][j] estimates ‖polys[i]‖_{L_{qs[j]}}. Every estimate that is not Parseval is read off one
/// shared grid (or one shared Monte Carlo sample), so comparisons between them use identical points.
std::vector<std::vector<NormEstimate>> lq_norms_shared(std::span<const VPoly> polys, std::span<const double> qs,
                                                       const AutoNormOptions& opts);
/// Monte Carlo counterpart of torus_grid_norms: result[i][j] for polys[i] and qs[j] on shared samples.
std::vector<std::vector<NormEstimate>> lq_norms_mc(std::span<const VPoly> polys, std::span<const double> qs,
                                                   const SamplerSpec& spec);

}  // namespace polytor
