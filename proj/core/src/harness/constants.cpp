#include "polytor/harness/constants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "polytor/bohr.hpp"
#include "polytor/error.hpp"
#include "polytor/harness/instances.hpp"
#include "polytor/projections.hpp"
#include "polytor/random.hpp"

namespace polytor::harness {

double hilbert_distortion(const NormedSpace& space) {
  const auto d = space.distortion();
  if (!d) throw Error(ErrorKind::domain, "space " + space.describe() + " declares no distortion to a Hilbert space");
  return d->product();
}

double certified_cotype_constant(const NormedSpace& space, double q) {
  if (!(q >= 2.0)) throw Error(ErrorKind::domain, "cotype needs q >= 2, got " + std::to_string(q));
  return hilbert_distortion(space);
}

double certified_type_constant(const NormedSpace& space, double p) {
  if (!(p >= 1.0 && p <= 2.0)) throw Error(ErrorKind::domain, "type needs 1 <= p <= 2, got " + std::to_string(p));
  return hilbert_distortion(space);
}

double per_degree_cotype_constant(const NormedSpace& space, double q, double p) {
  if (!(p >= 1.0)) throw Error(ErrorKind::domain, "p must be >= 1");
  return certified_cotype_constant(space, q) * std::sqrt(std::max(1.0, 2.0 / p));
}

double per_degree_type_constant(const NormedSpace& space, double p, double q_out) {
  if (!(q_out >= 1.0)) throw Error(ErrorKind::domain, "q must be >= 1");
  return certified_type_constant(space, p) * std::sqrt(std::max(1.0, q_out / 2.0));
}

CotypeChain cotype_chain(double c, double q, std::optional<double> r) {
  CotypeChain out;
  out.c = c;
  const double cq = std::pow(c, q);
  out.r = r.value_or(1.0 / (2.0 * cq));
  if (!(out.r > 0.0 && out.r * cq < 1.0)) {
    throw Error(ErrorKind::domain, "weight r = " + std::to_string(out.r) + " must satisfy 0 < r < 1/c^q = " +
                                       std::to_string(1.0 / cq));
  }
  out.constant = std::pow(1.0 / (1.0 - out.r * cq), 1.0 / q);
  return out;
}

TypeChain type_chain(double t, double p, std::optional<double> big_r) {
  TypeChain out;
  out.t = t;
  const double tp = std::pow(t, p);
  out.big_r = big_r.value_or(std::max(1.0, 2.0 * tp));
  if (!(out.big_r >= 1.0 && out.big_r > tp)) {
    throw Error(ErrorKind::domain, "weight R = " + std::to_string(out.big_r) + " must satisfy R >= 1 and R > t^p = " +
                                       std::to_string(tp));
  }
  if (p == 1.0) {
    // sup_m (t/R)^m = 1 at m = 0.
    out.constant = 1.0;
  } else {
    const double pc = p / (p - 1.0);
    out.constant = std::pow(1.0 / (1.0 - std::pow(tp / out.big_r, pc / p)), 1.0 / pc);
  }
  return out;
}

DeltaFactor delta_factor(double delta, double r) {
  if (!(delta > 0.0)) throw Error(ErrorKind::domain, "delta must be > 0");
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::domain, "r must lie in (0, 1)");
  const auto& table = PrimeTable::shared();
  DeltaFactor out;
  std::size_t k = 0;
  while (std::pow(static_cast<double>(table.prime(k)), -delta) > r) {
    if (++k >= table.count()) throw Error(ErrorKind::guard_exceeded, "no tabulated prime satisfies p^-delta <= r");
  }
  out.k = k + 1;
  if (out.k == 1) return out;
  for (std::size_t j = 0; j < out.k; ++j) out.factor /= 1.0 - std::pow(static_cast<double>(table.prime(j)), -delta);
  return out;
}

double hypercontractive_base(int m) { return lemma3_base(m); }

namespace {

VPoly linear_form(const NormedSpace& space, std::span<const Vector> xs) {
  VPoly p(space, xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const std::uint32_t member = static_cast<std::uint32_t>(i + 1);
    p.add_term(MultiIndex::indicator(xs.size(), std::span<const std::uint32_t>(&member, 1)), xs[i]);
  }
  return p;
}

double coefficient_sum(const NormedSpace& space, std::span<const Vector> xs, double q) {
  double s = 0.0;
  for (const auto& x : xs) s += std::pow(space.norm(x), q);
  return std::pow(s, 1.0 / q);
}

nlohmann::json family_json(std::span<const Vector> xs) {
  auto j = nlohmann::json::array();
  for (const auto& x : xs) j.push_back(vector_to_json(x));
  return j;
}

template <typename RatioFn>
ConstantEstimate search_constant(std::string name, const NormedSpace& space, std::size_t n, std::size_t budget,
                                 std::uint64_t seed, RatioFn&& ratio_of) {
  if (budget < 1) throw Error(ErrorKind::domain, "search budget must be >= 1");
  if (n < 1) throw Error(ErrorKind::domain, "need at least one vector");
  double best = -1.0;
  std::vector<Vector> best_xs;
  for (std::size_t i = 0; i < budget; ++i) {
    Rng rng = make_stream(seed, i);
    const auto kind = kind_for(i);
    auto xs = coefficients(space.dim(), kind == InstanceKind::single_monomial ? 1 : n, kind, rng);
    const double r = ratio_of(xs);
    if (r > best) {
      best = r;
      best_xs = std::move(xs);
    }
  }
  // Coordinate ascent over real and imaginary parts of every coordinate.
  double step = 0.25;
  for (int round = 0; round < 4; ++round, step *= 0.5) {
    for (std::size_t i = 0; i < best_xs.size(); ++i) {
      for (std::size_t k = 0; k < space.dim(); ++k) {
        for (const Complex dir : {Complex(1, 0), Complex(-1, 0), Complex(0, 1), Complex(0, -1)}) {
          auto candidate = best_xs;
          candidate[i][k] += step * dir;
          if (candidate[i].is_zero()) continue;
          const double r = ratio_of(candidate);
          if (r > best) {
            best = r;
            best_xs = std::move(candidate);
          }
        }
      }
    }
  }
  ConstantEstimate e;
  e.name = std::move(name);
  e.value = best;
  e.direction = ConstantDirection::lower_bound;
  e.search_budget = budget;
  e.seed = seed;
  e.witness = {{"vectors", family_json(best_xs)}, {"space", space.to_json()}};
  return e;
}

}  // namespace

CotypeRatio cotype_ratio(const NormedSpace& space, std::span<const Vector> xs, double q, const AutoNormOptions& opts) {
  CotypeRatio out;
  out.lhs = NormEstimate::exact_value(coefficient_sum(space, xs, q), EstimateMethod::coefficient_sum);
  out.rhs = lq_norm_auto(linear_form(space, xs), q, opts);
  out.ratio = out.rhs.value > 0.0 ? out.lhs.value / out.rhs.value : 0.0;
  return out;
}

CotypeRatio type_ratio(const NormedSpace& space, std::span<const Vector> xs, double p, const AutoNormOptions& opts) {
  CotypeRatio out;
  out.lhs = lq_norm_auto(linear_form(space, xs), p, opts);
  out.rhs = NormEstimate::exact_value(coefficient_sum(space, xs, p), EstimateMethod::coefficient_sum);
  out.ratio = out.rhs.value > 0.0 ? out.lhs.value / out.rhs.value : 0.0;
  return out;
}

ConstantEstimate estimate_cotype_constant(const NormedSpace& space, double q, std::size_t n, std::size_t budget,
                                          std::uint64_t seed, const AutoNormOptions& opts) {
  if (!(q >= 2.0)) throw Error(ErrorKind::domain, "cotype needs q >= 2, got " + std::to_string(q));
  auto e = search_constant("cotype_C_q", space, n, budget, seed,
                           [&](std::span<const Vector> xs) { return cotype_ratio(space, xs, q, opts).ratio; });
  e.params = {{"q", q}, {"n", n}};
  return e;
}

ConstantEstimate estimate_type_constant(const NormedSpace& space, double p, std::size_t n, std::size_t budget,
                                        std::uint64_t seed, const AutoNormOptions& opts) {
  if (!(p >= 1.0 && p <= 2.0)) throw Error(ErrorKind::domain, "type needs 1 <= p <= 2, got " + std::to_string(p));
  auto e = search_constant("type_T_p", space, n, budget, seed,
                           [&](std::span<const Vector> xs) { return type_ratio(space, xs, p, opts).ratio; });
  e.params = {{"p", p}, {"n", n}};
  return e;
}

double normal_quantile_two_sided(double level) {
  if (!(level > 0.0 && level < 1.0)) throw Error(ErrorKind::domain, "level must lie in (0, 1)");
  // P(|Z| <= z) = erf(z/√2); bisection is ample for a monotone target.
  double lo = 0.0;
  double hi = 40.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::erf(mid / std::sqrt(2.0)) < level ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace polytor::harness
