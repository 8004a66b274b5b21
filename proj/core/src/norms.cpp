#include "polytor/norms.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "polytor/error.hpp"
#include "polytor/random.hpp"

namespace polytor {

double NormEstimate::error_bound() const noexcept {
  switch (error) {
    case EstimateError::exact:
      return 0.0;
    case EstimateError::ci:
      return halfwidth;
    case EstimateError::grid_gap_unknown:
      return gap_estimate;
  }
  return 0.0;
}

nlohmann::json NormEstimate::to_json() const {
  nlohmann::json j{{"value", value},
                   {"method", to_string(method)},
                   {"error", to_string(error)},
                   {"error_bound", error_bound()}};
  if (error == EstimateError::ci) {
    j["halfwidth"] = halfwidth;
    j["level"] = level;
  }
  if (grid_points != 0) j["grid_points"] = grid_points;
  if (error == EstimateError::grid_gap_unknown) j["gap_estimate"] = gap_estimate;
  if (samples != 0) {
    j["samples"] = samples;
    j["seed"] = seed;
  }
  if (domain) j["domain"] = to_string(*domain);
  return j;
}

NormEstimate NormEstimate::exact_value(double value, EstimateMethod method) {
  NormEstimate e;
  e.value = value;
  e.method = method;
  return e;
}

std::string_view to_string(EstimateMethod method) noexcept {
  switch (method) {
    case EstimateMethod::parseval: return "parseval";
    case EstimateMethod::grid: return "grid";
    case EstimateMethod::mc: return "mc";
    case EstimateMethod::cube_exact: return "cube_exact";
    case EstimateMethod::cube_mc: return "cube_mc";
    case EstimateMethod::sup_grid: return "sup_grid";
    case EstimateMethod::coefficient_sum: return "coefficient_sum";
    case EstimateMethod::exact: return "exact";
  }
  return "unknown";
}

std::string_view to_string(EstimateError error) noexcept {
  switch (error) {
    case EstimateError::exact: return "exact";
    case EstimateError::ci: return "ci";
    case EstimateError::grid_gap_unknown: return "grid_gap_unknown";
  }
  return "unknown";
}

std::string_view to_string(SupDomain domain) noexcept {
  switch (domain) {
    case SupDomain::torus: return "torus";
    case SupDomain::cube: return "cube";
    case SupDomain::box: return "box";
  }
  return "unknown";
}

namespace {

void require_q(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw Error(ErrorKind::domain, "q must be finite and >= 1, got " + std::to_string(q));
}

Complex ipow(Complex z, std::uint32_t e) {
  Complex out(1.0, 0.0);
  while (e != 0) {
    if (e & 1u) out *= z;
    z *= z;
    e >>= 1;
  }
  return out;
}

std::uint64_t checked_grid_size(std::uint32_t m, std::size_t r, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (total > limit / std::max<std::uint32_t>(m, 1)) {
      throw Error(ErrorKind::budget_exceeded, "grid of " + std::to_string(m) + "^" + std::to_string(r) +
                                                  " points exceeds " + std::to_string(limit));
    }
    total *= m;
  }
  return total;
}

std::vector<std::uint32_t> union_active(std::span<const VPoly> polys) {
  std::vector<std::uint32_t> vars;
  for (const auto& p : polys) {
    auto a = p.active_variables();
    vars.insert(vars.end(), a.begin(), a.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

/// Terms re-indexed onto slots 0..r-1 of the active variables.
struct CompiledTerm {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;  // (slot, exponent)
  const Vector* coeff;
};

std::vector<CompiledTerm> compile(const VPoly& p, std::span<const std::uint32_t> active) {
  std::vector<CompiledTerm> out;
  out.reserve(p.size());
  for (const auto& [alpha, coeff] : p) {
    CompiledTerm t{{}, &coeff};
    for (const auto& [var, e] : alpha.support()) {
      const auto slot = static_cast<std::uint32_t>(std::lower_bound(active.begin(), active.end(), var) - active.begin());
      t.slots.emplace_back(slot, e);
    }
    out.push_back(std::move(t));
  }
  return out;
}

void accumulate_at(const std::vector<CompiledTerm>& terms, std::span<const Complex> point, std::vector<Complex>& acc) {
  std::fill(acc.begin(), acc.end(), Complex{});
  for (const auto& t : terms) {
    Complex mono(1.0, 0.0);
    for (const auto& [slot, e] : t.slots) mono *= ipow(point[slot], e);
    const auto c = t.coeff->coords();
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += mono * c[k];
  }
}

void require_same_shape(std::span<const VPoly> polys) {
  for (const auto& p : polys) {
    if (p.n_vars() != polys.front().n_vars() || p.space().dim() != polys.front().space().dim()) {
      throw Error(ErrorKind::dimension_mismatch, "polynomials on a shared grid need equal n_vars and dim");
    }
  }
}

/// Visits ‖P_i(ε)‖ for every sign pattern of the active slots using a Gray-code walk:
/// flipping ε_j negates exactly the terms that contain j.
template <typename Visit>
void gray_walk(const WalshPoly& w, std::span<const std::uint32_t> active, Visit&& visit) {
  const std::size_t r = active.size();
  const std::size_t dim = w.space().dim();
  std::vector<std::vector<std::size_t>> by_slot(r);
  std::vector<const Vector*> coeffs;
  std::vector<double> signs;
  std::vector<Complex> acc(dim);
  for (const auto& [subset, coeff] : w) {
    const std::size_t idx = coeffs.size();
    coeffs.push_back(&coeff);
    signs.push_back(1.0);
    for (auto member : subset.members()) {
      const auto slot = static_cast<std::size_t>(std::lower_bound(active.begin(), active.end(), member - 1) - active.begin());
      by_slot[slot].push_back(idx);
    }
    for (std::size_t k = 0; k < dim; ++k) acc[k] += coeff[k];
  }
  const std::uint64_t total = std::uint64_t{1} << r;
  std::uint64_t mask = 0;
  visit(mask, std::span<const Complex>(acc));
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto j = static_cast<std::size_t>(std::countr_zero(step));
    mask ^= std::uint64_t{1} << j;
    for (auto idx : by_slot[j]) {
      const double s = signs[idx];
      signs[idx] = -s;
      const auto c = coeffs[idx]->coords();
      for (std::size_t k = 0; k < dim; ++k) acc[k] -= 2.0 * s * c[k];
    }
    visit(mask, std::span<const Complex>(acc));
  }
}

std::vector<std::uint32_t> walsh_active(const WalshPoly& w) {
  std::vector<std::uint32_t> vars;
  for (const auto& [subset, coeff] : w) {
    for (auto m : subset.members()) vars.push_back(m - 1);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

void require_cube_size(std::size_t r) {
  if (r > kMaxCubeVars) {
    throw Error(ErrorKind::budget_exceeded, std::to_string(r) + " active variables exceed the exhaustive cube limit of " +
                                                std::to_string(kMaxCubeVars) + "; use cube_lq_mc");
  }
}

/// Largest fast-transform table, in complex entries.
constexpr std::uint64_t kMaxFwhtEntries = std::uint64_t{1} << 24;

struct Welford {
  std::uint64_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double y) {
    ++n;
    const double d = y - mean;
    mean += d / static_cast<double>(n);
    m2 += d * (y - mean);
  }
};

NormEstimate finish_mc(const Welford& acc, double q, const SamplerSpec& spec, EstimateMethod method) {
  NormEstimate e;
  e.method = method;
  e.error = EstimateError::ci;
  e.level = kCiLevel;
  e.samples = acc.n;
  e.seed = spec.seed;
  const double var = acc.n > 1 ? acc.m2 / static_cast<double>(acc.n - 1) : 0.0;
  const double mean_hw = kCiZ * std::sqrt(var / static_cast<double>(acc.n));
  if (acc.mean > 0.0) {
    e.value = std::pow(acc.mean, 1.0 / q);
    // Rounding in the running mean is a relative error of order n·eps; it dominates when the
    // integrand is (nearly) constant and the sample variance vanishes.
    const double rounding = static_cast<double>(acc.n) * std::numeric_limits<double>::epsilon() * e.value;
    e.halfwidth = mean_hw * (1.0 / q) * std::pow(acc.mean, 1.0 / q - 1.0) + rounding;
  }
  return e;
}

void require_samples(const SamplerSpec& spec) {
  if (spec.samples < kMinMcSamples) {
    throw Error(ErrorKind::domain, "Monte Carlo needs at least " + std::to_string(kMinMcSamples) + " samples");
  }
}

}  // namespace

Vector evaluate(const VPoly& p, std::span<const Complex> z) {
  if (z.size() != p.n_vars()) {
    throw Error(ErrorKind::dimension_mismatch, "point has " + std::to_string(z.size()) + " coordinates, polynomial has " +
                                                   std::to_string(p.n_vars()) + " variables");
  }
  Vector out(p.space().dim());
  for (const auto& [alpha, coeff] : p) {
    Complex mono(1.0, 0.0);
    for (const auto& [var, e] : alpha.support()) mono *= ipow(z[var], e);
    out.add_scaled(coeff, mono);
  }
  return out;
}

Vector eval_at(const VPoly& p, std::span<const Complex> z) {
  for (const auto& zi : z) {
    if (std::abs(std::abs(zi) - 1.0) > 1e-12) throw Error(ErrorKind::domain, "point is not on the torus");
  }
  return evaluate(p, z);
}

Vector evaluate(const WalshPoly& w, std::span<const int> signs) {
  if (signs.size() != w.n_vars()) throw Error(ErrorKind::dimension_mismatch, "sign vector length differs from n_vars");
  for (int s : signs) {
    if (s != 1 && s != -1) throw Error(ErrorKind::domain, "signs must be +1 or -1");
  }
  Vector out(w.space().dim());
  for (const auto& [subset, coeff] : w) {
    int s = 1;
    for (auto m : subset.members()) s *= signs[m - 1];
    out.add_scaled(coeff, Complex(s, 0.0));
  }
  return out;
}

NormEstimate l2_parseval(const VPoly& p) {
  if (!p.space().is_hilbert()) {
    throw Error(ErrorKind::not_euclidean, "Parseval needs a Hilbert space, got " + p.space().describe());
  }
  double sum = 0.0;
  for (const auto& [alpha, coeff] : p) {
    const double n = p.space().norm(coeff);
    sum += n * n;
  }
  return NormEstimate::exact_value(std::sqrt(sum), EstimateMethod::parseval);
}

std::vector<std::vector<double>> torus_grid_norms(std::span<const VPoly> polys, std::uint32_t grid_points) {
  if (polys.empty()) return {};
  if (grid_points == 0) throw Error(ErrorKind::domain, "grid needs at least one point per variable");
  require_same_shape(polys);
  const auto active = union_active(polys);
  const std::size_t r = active.size();
  const std::uint32_t m = grid_points;
  const std::uint64_t total = checked_grid_size(m, r, kMaxGridPoints);
  const std::size_t dim = polys.front().space().dim();

  std::vector<Complex> roots(m);
  for (std::uint32_t t = 0; t < m; ++t) roots[t] = std::polar(1.0, 2.0 * std::numbers::pi * t / m);

  // Phase of z^α at the grid point with digits d is Σ α_j d_j mod M; every digit change
  // (increment or wrap from M−1 to 0) adds α_j mod M.
  struct Flat {
    const Vector* coeff;
    std::uint32_t phase = 0;
  };
  std::vector<std::vector<Flat>> flat(polys.size());
  std::vector<std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>> by_slot(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    by_slot[i].resize(r);
    for (const auto& t : compile(polys[i], active)) {
      const auto idx = static_cast<std::uint32_t>(flat[i].size());
      flat[i].push_back({t.coeff, 0});
      for (const auto& [slot, e] : t.slots) by_slot[i][slot].emplace_back(idx, e % m);
    }
  }

  std::vector<std::vector<double>> out(polys.size(), std::vector<double>(total));
  std::vector<std::uint32_t> digits(r, 0);
  std::vector<Complex> acc(dim);
  for (std::uint64_t point = 0; point < total; ++point) {
    for (std::size_t i = 0; i < polys.size(); ++i) {
      std::fill(acc.begin(), acc.end(), Complex{});
      for (const auto& f : flat[i]) {
        const Complex w = roots[f.phase];
        const auto c = f.coeff->coords();
        for (std::size_t k = 0; k < dim; ++k) acc[k] += w * c[k];
      }
      out[i][point] = polys[i].space().norm(acc);
    }
    for (std::size_t j = 0; j < r; ++j) {
      const bool wrap = (++digits[j] == m);
      if (wrap) digits[j] = 0;
      for (std::size_t i = 0; i < polys.size(); ++i) {
        for (const auto& [idx, e] : by_slot[i][j]) {
          auto& ph = flat[i][idx].phase;
          ph = (ph + e) % m;
        }
      }
      if (!wrap) break;
    }
  }
  return out;
}

std::vector<double> torus_grid_norms(const VPoly& p, std::uint32_t grid_points) {
  return std::move(torus_grid_norms(std::span<const VPoly>(&p, 1), grid_points).front());
}

double power_mean(std::span<const double> values, double q) {
  require_q(q);
  if (values.empty()) return 0.0;
  // Scale by the max so large q cannot overflow.
  const double top = *std::max_element(values.begin(), values.end());
  if (top == 0.0) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += std::pow(v / top, q);
  return top * std::pow(sum / static_cast<double>(values.size()), 1.0 / q);
}

bool grid_is_exact(const VPoly& p, double q, std::uint32_t grid_points) {
  if (p.empty()) return true;
  if (!p.space().is_hilbert()) return false;
  if (q < 2.0 || std::fmod(q, 2.0) != 0.0) return false;
  return static_cast<double>(grid_points) > q * static_cast<double>(p.max_variable_degree());
}

NormEstimate lq_norm_grid(const VPoly& p, double q, std::uint32_t grid_points) {
  require_q(q);
  const auto values = torus_grid_norms(p, grid_points);
  NormEstimate e;
  e.value = power_mean(values, q);
  e.method = EstimateMethod::grid;
  e.grid_points = grid_points;
  e.error = grid_is_exact(p, q, grid_points) ? EstimateError::exact : EstimateError::grid_gap_unknown;
  return e;
}

NormEstimate lq_norm_mc(const VPoly& p, double q, const SamplerSpec& spec) {
  return lq_norms_mc(std::span<const VPoly>(&p, 1), std::span<const double>(&q, 1), spec).front().front();
}

std::vector<Vector> cube_values(const WalshPoly& w, bool use_fwht) {
  const auto active = walsh_active(w);
  const std::size_t r = active.size();
  require_cube_size(r);
  const std::size_t dim = w.space().dim();
  const std::uint64_t total = std::uint64_t{1} << r;
  std::vector<Vector> out(total, Vector(dim));
  if (use_fwht && total * dim <= kMaxFwhtEntries) {
    // F(s) = Σ_A x_A (−1)^{|A∩s|} is the unnormalised Walsh–Hadamard transform of A ↦ x_A.
    for (const auto& [subset, coeff] : w) {
      std::uint64_t mask = 0;
      for (auto m : subset.members()) {
        mask |= std::uint64_t{1} << (std::lower_bound(active.begin(), active.end(), m - 1) - active.begin());
      }
      out[mask] = coeff;
    }
    for (std::uint64_t half = 1; half < total; half <<= 1) {
      for (std::uint64_t base = 0; base < total; base += 2 * half) {
        for (std::uint64_t i = base; i < base + half; ++i) {
          for (std::size_t k = 0; k < dim; ++k) {
            const Complex a = out[i][k];
            const Complex b = out[i + half][k];
            out[i][k] = a + b;
            out[i + half][k] = a - b;
          }
        }
      }
    }
    return out;
  }
  gray_walk(w, active, [&](std::uint64_t mask, std::span<const Complex> v) {
    out[mask] = Vector(std::vector<Complex>(v.begin(), v.end()));
  });
  return out;
}

std::vector<double> cube_norms(const WalshPoly& w, bool use_fwht) {
  const auto active = walsh_active(w);
  require_cube_size(active.size());
  std::vector<double> out(std::uint64_t{1} << active.size());
  if (use_fwht && out.size() * w.space().dim() <= kMaxFwhtEntries) {
    const auto values = cube_values(w, true);
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = w.space().norm(values[i]);
    return out;
  }
  gray_walk(w, active, [&](std::uint64_t mask, std::span<const Complex> v) { out[mask] = w.space().norm(v); });
  return out;
}

NormEstimate cube_lq_exact(const WalshPoly& w, double q) {
  require_q(q);
  const auto norms = cube_norms(w, true);
  return NormEstimate::exact_value(power_mean(norms, q), EstimateMethod::cube_exact);
}

NormEstimate cube_lq_mc(const WalshPoly& w, double q, const SamplerSpec& spec) {
  require_q(q);
  require_samples(spec);
  const auto active = walsh_active(w);
  std::vector<std::pair<std::vector<std::size_t>, const Vector*>> terms;
  for (const auto& [subset, coeff] : w) {
    std::vector<std::size_t> slots;
    for (auto m : subset.members()) {
      slots.push_back(static_cast<std::size_t>(std::lower_bound(active.begin(), active.end(), m - 1) - active.begin()));
    }
    terms.emplace_back(std::move(slots), &coeff);
  }
  std::vector<int> signs(active.size());
  std::vector<Complex> acc(w.space().dim());
  Welford wf;
  for (std::uint64_t block = 0; block * kMcBlockSize < spec.samples; ++block) {
    Rng rng = make_stream(spec.seed, block);
    const std::uint64_t count = std::min(kMcBlockSize, spec.samples - block * kMcBlockSize);
    for (std::uint64_t s = 0; s < count; ++s) {
      for (auto& e : signs) e = (rng() >> 63) ? -1 : 1;
      std::fill(acc.begin(), acc.end(), Complex{});
      for (const auto& [slots, coeff] : terms) {
        int sign = 1;
        for (auto slot : slots) sign *= signs[slot];
        const auto c = coeff->coords();
        for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += static_cast<double>(sign) * c[k];
      }
      wf.add(std::pow(w.space().norm(acc), q));
    }
  }
  return finish_mc(wf, q, spec, EstimateMethod::cube_mc);
}

NormEstimate sup_grid(const VPoly& p, std::uint32_t grid_points, SupDomain domain) {
  NormEstimate e;
  e.method = EstimateMethod::sup_grid;
  e.error = EstimateError::grid_gap_unknown;
  e.domain = domain;
  switch (domain) {
    case SupDomain::torus: {
      const auto values = torus_grid_norms(p, grid_points);
      e.grid_points = grid_points;
      e.value = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
      break;
    }
    case SupDomain::cube: {
      // On {−1,1}ⁿ, z^α depends only on the parities of α.
      WalshPoly w(p.space(), p.n_vars());
      for (const auto& [alpha, coeff] : p) {
        std::vector<std::uint32_t> odd;
        for (const auto& [var, ex] : alpha.support()) {
          if (ex % 2 == 1) odd.push_back(var + 1);
        }
        w.add_term(SubsetIndex(std::move(odd)), coeff);
      }
      const auto values = cube_norms(w, true);
      e.grid_points = 2;
      e.error = EstimateError::exact;
      e.value = *std::max_element(values.begin(), values.end());
      break;
    }
    case SupDomain::box: {
      if (grid_points < 2) throw Error(ErrorKind::domain, "box grid needs at least 2 points per variable");
      const auto active = p.active_variables();
      const std::uint64_t total = checked_grid_size(grid_points, active.size(), kMaxGridPoints);
      const auto terms = compile(p, active);
      std::vector<std::uint32_t> digits(active.size(), 0);
      std::vector<Complex> point(active.size(), Complex(-1.0, 0.0));
      std::vector<Complex> acc(p.space().dim());
      const double step = 2.0 / (grid_points - 1);
      double best = 0.0;
      for (std::uint64_t i = 0; i < total; ++i) {
        accumulate_at(terms, point, acc);
        best = std::max(best, p.space().norm(acc));
        for (std::size_t j = 0; j < digits.size(); ++j) {
          if (++digits[j] == grid_points) digits[j] = 0;
          point[j] = Complex(-1.0 + step * digits[j], 0.0);
          if (digits[j] != 0) break;
        }
      }
      e.grid_points = grid_points;
      e.value = best;
      break;
    }
  }
  return e;
}

std::uint32_t choose_grid_points(std::size_t r, std::uint32_t d, double q, bool exact_possible,
                                 const AutoNormOptions& opts) {
  const std::uint32_t floor_m = std::max<std::uint32_t>(2, opts.min_grid_points + (opts.min_grid_points % 2));
  auto cost = [r](std::uint32_t m) {
    double c = 1.0;
    for (std::size_t i = 0; i < r; ++i) c *= m;
    return c;
  };
  const double budget = static_cast<double>(std::min(opts.max_grid_points, kMaxGridPoints));
  // Exactness target: smallest even M > q·d.
  if (exact_possible) {
    auto exact_m = static_cast<std::uint32_t>(std::floor(q * d)) + 1;
    exact_m += exact_m % 2;
    exact_m = std::max(exact_m, floor_m);
    if (cost(exact_m) <= budget) return exact_m;
  }
  // Otherwise the largest even M that leaves room for the M+1 gap grid.
  constexpr std::uint32_t kCap = 256;
  auto fits = [&](std::uint32_t m) { return cost(m) + (opts.estimate_gap ? cost(m + 1) : 0.0) <= budget; };
  if (!fits(floor_m)) return 0;
  std::uint32_t m = floor_m;
  while (m + 2 <= kCap && fits(m + 2)) m += 2;
  return m;
}

namespace {

bool even_exponent(double q) { return q >= 2.0 && std::fmod(q, 2.0) == 0.0; }

}  // namespace

std::uint32_t choose_grid_points(const VPoly& p, double q, const AutoNormOptions& opts) {
  return choose_grid_points(p.active_variables().size(), p.max_variable_degree(), q,
                            p.space().is_hilbert() && even_exponent(q), opts);
}

NormEstimate lq_norm_auto(const VPoly& p, double q, const AutoNormOptions& opts) {
  return lq_norms_shared(std::span<const VPoly>(&p, 1), std::span<const double>(&q, 1), opts).front().front();
}

std::vector<std::vector<NormEstimate>> lq_norms_mc(std::span<const VPoly> polys, std::span<const double> qs,
                                                   const SamplerSpec& spec) {
  for (double q : qs) require_q(q);
  require_samples(spec);
  if (polys.empty()) return {};
  require_same_shape(polys);
  const auto active = union_active(polys);
  std::vector<std::vector<CompiledTerm>> compiled;
  for (const auto& p : polys) compiled.push_back(compile(p, active));
  std::vector<Complex> point(active.size());
  std::vector<Complex> acc(polys.front().space().dim());
  std::vector<std::vector<Welford>> stats(polys.size(), std::vector<Welford>(qs.size()));
  for (std::uint64_t block = 0; block * kMcBlockSize < spec.samples; ++block) {
    Rng rng = make_stream(spec.seed, block);
    const std::uint64_t count = std::min(kMcBlockSize, spec.samples - block * kMcBlockSize);
    for (std::uint64_t s = 0; s < count; ++s) {
      for (auto& z : point) z = random_unit(rng);
      for (std::size_t i = 0; i < polys.size(); ++i) {
        accumulate_at(compiled[i], point, acc);
        const double v = polys[i].space().norm(acc);
        for (std::size_t j = 0; j < qs.size(); ++j) stats[i][j].add(std::pow(v, qs[j]));
      }
    }
  }
  std::vector<std::vector<NormEstimate>> out(polys.size());
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = 0; j < qs.size(); ++j) out[i].push_back(finish_mc(stats[i][j], qs[j], spec, EstimateMethod::mc));
  }
  return out;
}

std::vector<std::vector<NormEstimate>> lq_norms_shared(std::span<const VPoly> polys, std::span<const double> qs,
                                                       const AutoNormOptions& opts) {
  for (double q : qs) require_q(q);
  std::vector<std::vector<NormEstimate>> out(polys.size(), std::vector<NormEstimate>(qs.size()));
  if (polys.empty() || qs.empty()) return out;
  require_same_shape(polys);
  const bool hilbert = polys.front().space().is_hilbert();

  std::vector<std::pair<std::size_t, std::size_t>> pending;
  double q_max = 1.0;
  bool all_even = true;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    for (std::size_t j = 0; j < qs.size(); ++j) {
      if (hilbert && qs[j] == 2.0) {
        out[i][j] = l2_parseval(polys[i]);
      } else {
        pending.emplace_back(i, j);
        q_max = std::max(q_max, qs[j]);
        all_even = all_even && even_exponent(qs[j]);
      }
    }
  }
  if (pending.empty()) return out;

  std::uint32_t d = 0;
  for (const auto& p : polys) d = std::max(d, p.max_variable_degree());
  const std::size_t r = union_active(polys).size();
  const std::uint32_t m = choose_grid_points(r, d, q_max, hilbert && all_even, opts);
  if (m == 0) {
    SamplerSpec spec;
    spec.seed = opts.seed;
    spec.samples = std::max(opts.mc_samples, kMinMcSamples);
    const auto mc = lq_norms_mc(polys, qs, spec);
    for (const auto& [i, j] : pending) out[i][j] = mc[i][j];
    return out;
  }

  const auto values = torus_grid_norms(polys, m);
  std::vector<std::vector<double>> refined;
  for (const auto& [i, j] : pending) {
    auto& e = out[i][j];
    e.value = power_mean(values[i], qs[j]);
    e.method = EstimateMethod::grid;
    e.grid_points = m;
    e.error = grid_is_exact(polys[i], qs[j], m) ? EstimateError::exact : EstimateError::grid_gap_unknown;
    if (e.error == EstimateError::grid_gap_unknown && opts.estimate_gap) {
      if (refined.empty()) refined = torus_grid_norms(polys, m + 1);
      e.gap_estimate = std::abs(e.value - power_mean(refined[i], qs[j]));
    }
  }
  return out;
}

}  // namespace polytor
