#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "polytor/harness/report.hpp"
#include "polytor/norms.hpp"

namespace polytor::harness {

/// Product a·b of the distortion constants to the Hilbert space of the same dimension.
/// Throws Error(domain) for a custom space that declared none.
double hilbert_distortion(const NormedSpace& space);

/// Upper bounds transferred from the Hilbert space through the distortion.
/// Cotype q >= 2: a·b. Type p in [1, 2]: a·b.
double certified_cotype_constant(const NormedSpace& space, double q);
double certified_type_constant(const NormedSpace& space, double p);
/// c with (Σ_{|α|=m} ‖x_α‖^q)^{1/q} <= c^m ‖P‖_{L_p} for m-homogeneous P: a·b·sqrt(max(1, 2/p)).
double per_degree_cotype_constant(const NormedSpace& space, double q, double p);
/// t with ‖P‖_{L_q} <= t^m (Σ_{|α|=m} ‖x_α‖^p)^{1/p} for m-homogeneous P: a·b·sqrt(max(1, q/2)).
double per_degree_type_constant(const NormedSpace& space, double p, double q_out);

/// Geometric-series closure on the cotype side: weights r^{|α|} with r·c^q < 1 give
/// (Σ_α r^{|α|} ‖x_α‖^q)^{1/q} <= C ‖P‖_{L_p}, C = (1 − r c^q)^{−1/q}.
struct CotypeChain {
  double c = 1.0;
  double r = 0.5;
  double constant = 1.0;
};
/// r defaults to 1/(2c^q). Throws Error(domain) unless 0 < r < 1/c^q.
CotypeChain cotype_chain(double c, double q, std::optional<double> r = std::nullopt);

/// Type side: ‖P‖_{L_q} <= C (Σ_α R^{|α|} ‖x_α‖^p)^{1/p} with R > t^p, by Hölder over degrees.
struct TypeChain {
  double t = 1.0;
  double big_r = 2.0;
  double constant = 1.0;
};
/// R defaults to max(1, 2t^p). Throws Error(domain) unless R >= 1 and R > t^p.
TypeChain type_chain(double t, double p, std::optional<double> big_r = std::nullopt);

/// Factor for n^{−δ} weights: k is the least index with p_k^{−δ} <= r (1-based), and the factor is
/// Π_{j<=k} 1/(1 − p_j^{−δ}), or 1 when k = 1 (then n^{−δ} <= r^{Ω(n)} outright).
struct DeltaFactor {
  std::size_t k = 1;
  double factor = 1.0;
};
DeltaFactor delta_factor(double delta, double r);

/// Supremum of the sup-norms of the projection polynomials up to order m, each bounded by
/// the Hilbert-inverse envelope: B = max_{j<=m} ((j+1)·max|a^{(j)}|)^{1/j}.
double hypercontractive_base(int m);

/// (Σ ‖x_i‖^q)^{1/q} / ‖Σ x_i z_i‖_{L_q} together with the estimate of the denominator.
struct CotypeRatio {
  double ratio = 0.0;
  NormEstimate lhs;
  NormEstimate rhs;
};
CotypeRatio cotype_ratio(const NormedSpace& space, std::span<const Vector> xs, double q, const AutoNormOptions& opts);
/// ‖Σ x_i z_i‖_{L_p} / (Σ ‖x_i‖^p)^{1/p}.
CotypeRatio type_ratio(const NormedSpace& space, std::span<const Vector> xs, double p, const AutoNormOptions& opts);

/// Lower bound on C_q(X): best ratio over `budget` random families of n vectors (corner cases included),
/// refined by coordinate ascent on the best family. Requires q >= 2 and budget >= 1.
ConstantEstimate estimate_cotype_constant(const NormedSpace& space, double q, std::size_t n, std::size_t budget,
                                          std::uint64_t seed, const AutoNormOptions& opts = {});
/// Lower bound on T_p(X), p in [1, 2].
ConstantEstimate estimate_type_constant(const NormedSpace& space, double p, std::size_t n, std::size_t budget,
                                        std::uint64_t seed, const AutoNormOptions& opts = {});

/// Two-sided standard normal quantile: P(|Z| <= z) = level.
double normal_quantile_two_sided(double level);

}  // namespace polytor::harness
