#include "polytor/harness/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <string>

#include "polytor/bohr.hpp"
#include "polytor/combinatorics.hpp"
#include "polytor/error.hpp"
#include "polytor/harness/constants.hpp"
#include "polytor/harness/instances.hpp"
#include "polytor/parallel.hpp"
#include "polytor/projections.hpp"
#include "polytor/random.hpp"

namespace polytor::harness {

AutoNormOptions Budget::norm_options(std::uint64_t seed) const {
  AutoNormOptions o;
  o.max_grid_points = max_grid_points;
  o.mc_samples = mc_samples;
  o.seed = seed;
  return o;
}

nlohmann::json Budget::to_json() const {
  return {{"max_grid_points", max_grid_points}, {"mc_samples", mc_samples}, {"cube_max_vars", cube_max_vars}};
}

Budget Budget::from_json(const nlohmann::json& j) {
  Budget b;
  if (j.is_null()) return b;
  if (!j.is_object()) throw Error(ErrorKind::config, "budget must be an object");
  auto read = [&j](const char* key, auto& field) {
    if (!j.contains(key)) return;
    if (!j.at(key).is_number_unsigned()) throw Error(ErrorKind::config, std::string("budget.") + key + " must be a nonnegative integer");
    field = j.at(key).get<std::remove_reference_t<decltype(field)>>();
  };
  read("max_grid_points", b.max_grid_points);
  read("mc_samples", b.mc_samples);
  read("cube_max_vars", b.cube_max_vars);
  if (b.cube_max_vars > kMaxCubeVars) throw Error(ErrorKind::config, "budget.cube_max_vars exceeds 24");
  return b;
}

namespace {

constexpr double kSqrt2Plus1 = 1.0 + std::numbers::sqrt2;

// ---- parameter access -------------------------------------------------------------------------

double num_param(const CheckSpec& s, const char* key, double fallback) {
  if (!s.params.contains(key)) return fallback;
  const auto& v = s.params.at(key);
  if (!v.is_number()) throw Error(ErrorKind::config, s.name + ": param '" + key + "' must be a number");
  return v.get<double>();
}

std::optional<double> opt_param(const CheckSpec& s, const char* key) {
  if (!s.params.contains(key) || s.params.at(key).is_null()) return std::nullopt;
  return num_param(s, key, 0.0);
}

std::uint32_t int_param(const CheckSpec& s, const char* key, std::uint32_t fallback) {
  if (!s.params.contains(key)) return fallback;
  const auto& v = s.params.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::int64_t>() > 0xFFFFFFFFLL) {
    throw Error(ErrorKind::config, s.name + ": param '" + key + "' must be a nonnegative integer");
  }
  return static_cast<std::uint32_t>(v.get<std::int64_t>());
}

std::string str_param(const CheckSpec& s, const char* key, std::string fallback) {
  if (!s.params.contains(key)) return fallback;
  const auto& v = s.params.at(key);
  if (!v.is_string()) throw Error(ErrorKind::config, s.name + ": param '" + key + "' must be a string");
  return v.get<std::string>();
}

std::vector<double> list_param(const CheckSpec& s, const char* key, std::vector<double> fallback) {
  if (!s.params.contains(key)) return fallback;
  const auto& v = s.params.at(key);
  if (v.is_number()) return {v.get<double>()};
  if (!v.is_array()) throw Error(ErrorKind::config, s.name + ": param '" + key + "' must be a number or array");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) throw Error(ErrorKind::config, s.name + ": param '" + key + "' must hold numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

void require(bool ok, const CheckSpec& s, const std::string& what) {
  if (!ok) throw Error(ErrorKind::config, s.name + ": " + what);
}

/// Cotype-side certified constant, or Error(config) when the space cannot provide one.
template <typename Fn>
double certified(const CheckSpec& s, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(ErrorKind::config, s.name + ": " + e.what());
  }
}

// ---- shared plumbing --------------------------------------------------------------------------

std::string sub(const CheckSpec& s, std::string_view suffix) { return s.name + "/" + std::string(suffix); }

nlohmann::json instance_json(const CheckSpec& s, std::size_t i, nlohmann::json body) {
  return {{"check", s.name}, {"index", i}, {"space", s.space.to_json()}, {"instance", std::move(body)}};
}

void sort_reports(std::vector<InequalityReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const InequalityReport& a, const InequalityReport& b) { return a.instance_digest < b.instance_digest; });
}

using InstanceFn = std::function<void(std::size_t, Rng&, std::vector<InequalityReport>&)>;

CheckResult per_instance(const CheckSpec& s, unsigned jobs, const InstanceFn& fn) {
  auto chunks = parallel_map(s.instances, jobs, [&](std::size_t i) {
    std::vector<InequalityReport> out;
    Rng rng = make_stream(s.seed, i);
    try {
      fn(i, rng, out);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::config) throw;
      out.clear();
      out.push_back(skipped_report(s.name, instance_json(s, i, nullptr), e.what()));
    }
    return out;
  });
  CheckResult r;
  for (auto& c : chunks) {
    for (auto& rep : c) r.reports.push_back(std::move(rep));
  }
  sort_reports(r.reports);
  return r;
}

NormEstimate coeff_sum(double value) { return NormEstimate::exact_value(value, EstimateMethod::coefficient_sum); }

/// (Σ_α w(α) ‖x_α‖^q)^{1/q}.
template <typename Weight>
double weighted_coefficients(const VPoly& p, double q, Weight&& w) {
  double s = 0.0;
  for (const auto& [alpha, coeff] : p) s += w(alpha) * std::pow(p.space().norm(coeff), q);
  return std::pow(s, 1.0 / q);
}

double coefficient_lq(const VPoly& p, double q) {
  return weighted_coefficients(p, q, [](const MultiIndex&) { return 1.0; });
}

/// Uniform integer in [lo, hi].
std::uint32_t draw(Rng& rng, std::uint32_t lo, std::uint32_t hi) {
  return lo + static_cast<std::uint32_t>(rng() % (static_cast<std::uint64_t>(hi - lo) + 1));
}

// ---- bohr_roundtrip ---------------------------------------------------------------------------

CheckResult run_bohr_roundtrip(const CheckSpec& s, const Budget&, unsigned jobs) {
  const auto support_max = static_cast<std::uint64_t>(num_param(s, "support_max", 1e6));
  const auto terms = int_param(s, "terms", 16);
  require(support_max >= 1 && support_max <= PrimeTable::kDefaultBound, s, "support_max must lie in [1, 1e6]");
  const auto& table = PrimeTable::shared();
  const std::size_t n_primes = std::max<std::size_t>(1, table.count_up_to(support_max));
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const auto kind = kind_for(i);
    DirichletPoly d(s.space);
    const std::size_t count = kind == InstanceKind::single_monomial ? 1 : terms;
    const auto coeffs = coefficients(s.space.dim(), count, kind, rng);
    for (const auto& c : coeffs) d.add_term(1 + rng() % support_max, c);
    const VPoly lifted = bohr_lift(d, n_primes, table);
    double mismatches = 0;
    if (!(bohr_push(lifted, table) == d)) ++mismatches;
    if (!(bohr_lift(bohr_push(lifted, table), n_primes, table) == lifted)) ++mismatches;
    if (lifted.size() != d.size()) ++mismatches;
    for (const auto& [alpha, coeff] : lifted) {
      const DirichletPoly single = [&] {
        VPoly mono(s.space, lifted.n_vars());
        mono.add_term(alpha, coeff);
        return bohr_push(mono, table);
      }();
      if (omega(single.begin()->first, table) != alpha.degree()) ++mismatches;
    }
    out.push_back(exact_zero_report(s.name, mismatches, instance_json(s, i, d.to_json()),
                                    {{"terms", d.size()}, {"n_primes", n_primes}}));
  });
}

// ---- hilbert_exactness ------------------------------------------------------------------------

CheckResult run_hilbert_exactness(const CheckSpec& s, const Budget&, unsigned) {
  const int m_max = static_cast<int>(int_param(s, "m_max", 12));
  const int fit_from = static_cast<int>(int_param(s, "fit_from", 4));
  const double tolerance = num_param(s, "tolerance", 0.05);
  require(m_max <= kMaxHilbertOrder, s, "m_max must be <= 20");
  CheckResult r;
  std::vector<double> xs;
  std::vector<double> ys;
  for (int m = 0; m <= m_max; ++m) {
    const auto h = hilbert_matrix(m);
    const auto a = hilbert_inverse(m);
    const auto n = static_cast<std::size_t>(m) + 1;
    double mismatches = (h * a == RationalMatrix::identity(n)) ? 0 : 1;
    if (!h.is_symmetric()) ++mismatches;
    const auto polys = projection_polynomials(m);
    double sup = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (polys[j].moment(i) != mpq_class(i == j ? 1 : 0)) ++mismatches;
      }
      sup = std::max(sup, polys[j].sup_on_grid(2000));
    }
    const double max_abs = a.max_abs().get_d();
    const nlohmann::json inst = {{"check", s.name}, {"m", m}};
    r.reports.push_back(exact_zero_report(sub(s, "identity"), mismatches, inst, {{"m", m}}));
    NormEstimate sup_est = NormEstimate::exact_value(sup, EstimateMethod::sup_grid);
    sup_est.error = EstimateError::grid_gap_unknown;
    sup_est.grid_points = 2000;
    r.reports.push_back(make_report(sub(s, "envelope"), sup_est, NormEstimate::exact_value(max_abs),
                                    static_cast<double>(m + 1), m, inst, {{"m", m}, {"max_abs_inverse", max_abs}}));
    if (m >= fit_from) {
      xs.push_back(m);
      ys.push_back(std::log(max_abs));
    }
  }
  if (xs.size() >= 2) {
    const double n = static_cast<double>(xs.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double intercept = (sy - slope * sx) / n;
    double worst = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      const double fit = intercept + slope * xs[i];
      worst = std::max(worst, std::abs(ys[i] - fit) / std::abs(fit));
    }
    r.reports.push_back(make_report(sub(s, "growth"), NormEstimate::exact_value(worst),
                                    NormEstimate::exact_value(tolerance), 1.0, 0,
                                    {{"check", s.name}, {"fit", "log_max_abs"}},
                                    {{"slope", slope}, {"intercept", intercept}, {"growth_base", std::exp(slope)},
                                     {"log_max_abs", ys}, {"m_from", fit_from}, {"m_to", m_max}}));
  }
  sort_reports(r.reports);
  return r;
}

// ---- projection_oracle ------------------------------------------------------------------------

CheckResult run_projection_oracle(const CheckSpec& s, const Budget&, unsigned jobs) {
  const auto n_max = int_param(s, "n_max", 8);
  const auto m_max = int_param(s, "m_max", 8);
  require(n_max >= 1 && m_max <= static_cast<std::uint32_t>(kMaxHilbertOrder), s, "need n_max >= 1 and m_max <= 20");
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const auto n = draw(rng, 1, n_max);
    const auto m = draw(rng, 0, m_max);
    const WalshPoly w = random_walsh(s.space, n, std::min(m, n), false, kind_for(i), rng, 64);
    double mismatches = 0;
    WalshPoly total(s.space, n);
    for (std::uint32_t k = 0; k <= m; ++k) {
      const auto filtered = walsh_homog_filter(w, k);
      if (!(lemma3_projection(w, k, static_cast<int>(m)) == filtered)) ++mismatches;
      for (const auto& [a, x] : filtered) total.add_term(a, x);
    }
    if (!(total == w)) ++mismatches;
    out.push_back(exact_zero_report(s.name, mismatches, instance_json(s, i, w.to_json()), {{"n", n}, {"m", m}}));
  });
}

// ---- parseval_triangulation -------------------------------------------------------------------

CheckResult run_parseval(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  require(s.space.is_hilbert(), s, "parseval_triangulation needs a Hilbert space");
  const auto n_max = int_param(s, "n_max", 4);
  const auto deg_max = int_param(s, "deg_max", 3);
  const double tol = num_param(s, "grid_tolerance", 1e-9);
  require(n_max >= 1, s, "n_max must be >= 1");
  // A fail needs a deviation outside the Bonferroni-adjusted band; outside the plain band is inconclusive.
  const double z_plain = kCiZ;
  const double z_family = normal_quantile_two_sided(1.0 - (1.0 - kCiLevel) / std::max<double>(1.0, s.instances));
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const auto n = draw(rng, 1, n_max);
    const auto d = draw(rng, 0, deg_max);
    const VPoly p = random_vpoly(s.space, n, d, false, false, kind_for(i), rng);
    const auto inst = instance_json(s, i, p.to_json());
    const auto parseval = l2_parseval(p);
    const std::uint32_t m = 2 * std::max<std::uint32_t>(1, p.max_variable_degree()) + 1;
    const auto grid = lq_norm_grid(p, 2.0, m);
    out.push_back(make_report(sub(s, "grid"), NormEstimate::exact_value(std::abs(grid.value - parseval.value)),
                              NormEstimate::exact_value(tol), 1.0, static_cast<int>(p.degree()), inst,
                              {{"parseval", parseval.value}, {"grid", grid.to_json()}}));
    SamplerSpec spec;
    spec.seed = derive_seed(s.seed, "mc/" + std::to_string(i));
    spec.samples = std::max(budget.mc_samples, kMinMcSamples);
    const auto mc = lq_norm_mc(p, 2.0, spec);
    NormEstimate deviation = NormEstimate::exact_value(std::abs(mc.value - parseval.value));
    deviation.error = EstimateError::ci;
    deviation.level = kCiLevel;
    deviation.halfwidth = mc.halfwidth * (z_family - z_plain) / z_plain;
    out.push_back(make_report(sub(s, "mc"), deviation, NormEstimate::exact_value(mc.halfwidth), 1.0,
                              static_cast<int>(p.degree()), inst,
                              {{"parseval", parseval.value}, {"mc", mc.to_json()}, {"z_family", z_family}}));
  });
}

// ---- lemma1_bridge ----------------------------------------------------------------------------

CheckResult run_lemma1_bridge(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const double q = num_param(s, "q", 2.0);
  const auto m_max = int_param(s, "m_max", 3);
  const auto n_max = int_param(s, "n_max", 4);
  const bool homogeneous = str_param(s, "shape", "degree") == "homogeneous";
  require(q >= 1.0, s, "q must be >= 1");
  require(n_max >= std::max<std::uint32_t>(1, m_max), s, "n_max must be >= max(1, m_max)");
  require(n_max <= budget.cube_max_vars, s, "n_max exceeds budget.cube_max_vars");
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const auto m = draw(rng, 0, m_max);
    const auto n = draw(rng, std::max<std::uint32_t>(1, m), n_max);
    const VPoly p = random_vpoly(s.space, n, m, homogeneous, true, kind_for(i), rng);
    const auto deg = static_cast<int>(p.degree());
    const double c = std::pow(kSqrt2Plus1, deg);
    const auto inst = instance_json(s, i, p.to_json());
    const auto torus = lq_norm_auto(p, q, budget.norm_options(derive_seed(s.seed, "torus/" + std::to_string(i))));
    const auto cube = cube_lq_exact(tetra_to_walsh(p), q);
    const nlohmann::json params = {{"q", q}, {"m", deg}, {"n", n}};
    out.push_back(make_report(sub(s, "torus_upper"), torus, cube, c, deg, inst, params));
    out.push_back(make_report(sub(s, "torus_lower"), cube, torus, c, deg, inst, params));
    // A tetrahedral polynomial is affine in each coordinate, so its sup over the box sits on the
    // vertices; M = 2 on the box is exact. The torus side is a grid lower bound.
    const std::size_t r = p.active_variables().size();
    std::uint32_t m_sup = 2;
    while (std::pow(m_sup + 2.0, static_cast<double>(r)) <= static_cast<double>(budget.max_grid_points) && m_sup < 64) {
      m_sup += 2;
    }
    const auto sup_torus = sup_grid(p, m_sup, SupDomain::torus);
    auto sup_box = sup_grid(p, 2, SupDomain::box);
    sup_box.error = EstimateError::exact;
    out.push_back(make_report(sub(s, "sup"), sup_torus, sup_box, c, deg, inst, params));
  });
}

// ---- kahane / walsh_kahane --------------------------------------------------------------------

std::vector<std::pair<double, double>> kahane_pairs(const CheckSpec& s) {
  std::vector<std::pair<double, double>> pairs{{1.0, 2.0}, {2.0, 4.0}};
  if (s.params.contains("pairs")) {
    pairs.clear();
    const auto& v = s.params.at("pairs");
    require(v.is_array(), s, "pairs must be an array of [s, r]");
    for (const auto& e : v) {
      require(e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number(), s, "pairs must be [s, r]");
      pairs.emplace_back(e[0].get<double>(), e[1].get<double>());
    }
  }
  for (const auto& [lo, hi] : pairs) require(lo >= 1.0 && lo <= hi, s, "each pair needs 1 <= s <= r");
  return pairs;
}

CheckResult run_kahane(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const auto pairs = kahane_pairs(s);
  const auto m_max = int_param(s, "m_max", 3);
  const auto n_max = int_param(s, "n_max", 4);
  require(n_max >= 1, s, "n_max must be >= 1");
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const auto m = draw(rng, 0, m_max);
    const auto n = draw(rng, 1, n_max);
    const VPoly p = random_vpoly(s.space, n, m, true, false, kind_for(i), rng);
    // Companion with lower-degree terms: ratios logged, no bound asserted.
    VPoly mixed = p;
    if (m > 0) {
      const VPoly low = random_vpoly(s.space, n, m - 1, false, false, InstanceKind::generic, rng, 6);
      for (const auto& [a, x] : low) mixed.add_term(a, x);
    }
    const auto inst = instance_json(s, i, p.to_json());
    std::vector<double> qs;
    for (const auto& [lo, hi] : pairs) {
      qs.push_back(lo);
      qs.push_back(hi);
    }
    const std::vector<VPoly> polys{p, mixed};
    const auto est = lq_norms_shared(polys, qs, budget.norm_options(derive_seed(s.seed, "kahane/" + std::to_string(i))));
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const auto [lo, hi] = pairs[k];
      const double c = std::pow(hi / lo, m / 2.0);
      const auto& mixed_lo = est[1][2 * k];
      const auto& mixed_hi = est[1][2 * k + 1];
      out.push_back(make_report(s.name, est[0][2 * k + 1], est[0][2 * k], c, static_cast<int>(m), inst,
                                {{"s", lo},
                                 {"r", hi},
                                 {"n", n},
                                 {"nonhomogeneous_ratio", mixed_lo.value > 0 ? mixed_hi.value / mixed_lo.value : 0.0},
                                 {"nonhomogeneous_bound_if_homogeneous", c}}));
    }
  });
}

CheckResult run_walsh_kahane(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const auto pairs = kahane_pairs(s);
  const auto m_max = int_param(s, "m_max", 3);
  const auto n_max = int_param(s, "n_max", 6);
  require(n_max >= 1 && n_max <= budget.cube_max_vars, s, "n_max must lie in [1, budget.cube_max_vars]");
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const auto n = draw(rng, 1, n_max);
    const auto m = draw(rng, 0, std::min(m_max, n));
    const WalshPoly w = random_walsh(s.space, n, m, false, kind_for(i), rng);
    const int deg = static_cast<int>(w.degree());
    const auto norms = cube_norms(w);
    const auto inst = instance_json(s, i, w.to_json());
    for (const auto& [lo, hi] : pairs) {
      const double c = std::pow(kSqrt2Plus1 * std::sqrt(hi / lo), deg);
      out.push_back(make_report(s.name, NormEstimate::exact_value(power_mean(norms, hi), EstimateMethod::cube_exact),
                                NormEstimate::exact_value(power_mean(norms, lo), EstimateMethod::cube_exact), c, deg,
                                inst, {{"s", lo}, {"r", hi}, {"n", n}}));
    }
  });
}

// ---- cotype / type definitions ----------------------------------------------------------------

CheckResult run_cotype_def(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const double q = num_param(s, "q", 2.0);
  require(q >= 2.0, s, "cotype needs q >= 2");
  const auto n_max = int_param(s, "n", 4);
  require(n_max >= 1, s, "n must be >= 1");
  const double c = opt_param(s, "constant").value_or(certified(s, [&] { return certified_cotype_constant(s.space, q); }));
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const auto kind = kind_for(i);
    const auto xs = coefficients(s.space.dim(), kind == InstanceKind::single_monomial ? 1 : n_max, kind, rng);
    const auto ratio = cotype_ratio(s.space, xs, q, budget.norm_options(derive_seed(s.seed, std::to_string(i))));
    nlohmann::json vecs = nlohmann::json::array();
    for (const auto& x : xs) vecs.push_back(vector_to_json(x));
    out.push_back(make_report(s.name, ratio.lhs, ratio.rhs, c, 1, instance_json(s, i, vecs), {{"q", q}, {"n", xs.size()}}));
  });
}

CheckResult run_type_def(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const double p = num_param(s, "p", 2.0);
  require(p >= 1.0 && p <= 2.0, s, "type needs 1 <= p <= 2");
  const auto n_max = int_param(s, "n", 4);
  require(n_max >= 1, s, "n must be >= 1");
  const double c = opt_param(s, "constant").value_or(certified(s, [&] { return certified_type_constant(s.space, p); }));
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const auto kind = kind_for(i);
    const auto xs = coefficients(s.space.dim(), kind == InstanceKind::single_monomial ? 1 : n_max, kind, rng);
    const auto ratio = type_ratio(s.space, xs, p, budget.norm_options(derive_seed(s.seed, std::to_string(i))));
    nlohmann::json vecs = nlohmann::json::array();
    for (const auto& x : xs) vecs.push_back(vector_to_json(x));
    out.push_back(make_report(s.name, ratio.lhs, ratio.rhs, c, 1, instance_json(s, i, vecs), {{"p", p}, {"n", xs.size()}}));
  });
}

/// Search for a lower bound of the best constant, then check it against the certified upper bound.
CheckResult run_constant(const CheckSpec& s, const Budget& budget, bool cotype) {
  const double e = cotype ? num_param(s, "q", 2.0) : num_param(s, "p", 2.0);
  const auto n = int_param(s, "n", 3);
  if (cotype) {
    require(e >= 2.0, s, "cotype needs q >= 2");
  } else {
    require(e >= 1.0 && e <= 2.0, s, "type needs 1 <= p <= 2");
  }
  const double upper = certified(s, [&] {
    return cotype ? certified_cotype_constant(s.space, e) : certified_type_constant(s.space, e);
  });
  const auto opts = budget.norm_options(derive_seed(s.seed, "norms"));
  auto est = cotype ? estimate_cotype_constant(s.space, e, n, std::max<std::size_t>(1, s.instances), s.seed, opts)
                    : estimate_type_constant(s.space, e, n, std::max<std::size_t>(1, s.instances), s.seed, opts);
  // Error of the witness ratio, from the error of its norm estimate.
  std::vector<Vector> xs;
  for (const auto& v : est.witness.at("vectors")) xs.push_back(vector_from_json(v, s.space.dim()));
  const auto ratio = cotype ? cotype_ratio(s.space, xs, e, opts) : type_ratio(s.space, xs, e, opts);
  const auto& norm = cotype ? ratio.rhs : ratio.lhs;
  NormEstimate lhs = NormEstimate::exact_value(est.value);
  if (norm.error_bound() > 0.0 && norm.value > 0.0) {
    lhs.error = norm.error;
    lhs.gap_estimate = lhs.halfwidth = est.value * norm.error_bound() / std::max(norm.value - norm.error_bound(), 1e-300);
    lhs.level = norm.level;
  }
  est.params["certified_upper"] = upper;
  CheckResult r;
  r.reports.push_back(make_report(s.name, lhs, NormEstimate::exact_value(1.0), upper, 1,
                                  {{"check", s.name}, {"witness", est.witness}}, est.params));
  r.constants.push_back(std::move(est));
  return r;
}

// ---- hypercontractive_cotype ------------------------------------------------------------------

CheckResult run_hypercontractive(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const double q = num_param(s, "q", 2.0);
  require(q >= 2.0, s, "cotype needs q >= 2");
  const auto m_max = int_param(s, "m_max", 2);
  const auto n_max = int_param(s, "n_max", 3);
  const std::string mode = str_param(s, "mode", "general");
  require(mode == "general" || mode == "homogeneous" || mode == "tetrahedral", s,
          "mode must be general, homogeneous or tetrahedral");
  require(m_max >= 1 && n_max >= 1, s, "m_max and n_max must be >= 1");
  require(mode != "tetrahedral" || n_max >= m_max, s, "tetrahedral mode needs n_max >= m_max");
  const double cq = certified(s, [&] { return certified_cotype_constant(s.space, q); });
  const double base = hypercontractive_base(static_cast<int>(std::min<std::uint32_t>(m_max, kMaxHilbertOrder)));
  const double chain = mode == "tetrahedral" ? std::pow(4.0, 1.0 / q) * cq : 20.0 * base * cq;
  const double c_hyp = opt_param(s, "C_hyp").value_or(chain);
  const double torus_chain = 2.0 * std::max(std::pow(20.0 * base * cq, 2.0), std::pow(base, 4.0));
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const bool tetra = mode == "tetrahedral";
    const auto m = draw(rng, 1, m_max);
    const auto n = draw(rng, tetra ? m : 1, n_max);
    const VPoly p = random_vpoly(s.space, n, m, mode != "general", tetra, kind_for(i), rng);
    const int deg = static_cast<int>(p.degree());
    const auto rhs = lq_norm_auto(p, q, budget.norm_options(derive_seed(s.seed, std::to_string(i))));
    out.push_back(make_report(s.name, coeff_sum(coefficient_lq(p, q)), rhs, std::pow(c_hyp, deg), deg,
                              instance_json(s, i, p.to_json()),
                              {{"q", q},
                               {"mode", mode},
                               {"C_hyp", c_hyp},
                               {"C_q_certified", cq},
                               {"B", base},
                               {"torus_chain_constant", torus_chain}}));
  });
}

// ---- Dirichlet chain --------------------------------------------------------------------------

struct DirichletSetup {
  std::vector<std::uint64_t> support;
  std::size_t n_primes = 6;
  std::uint32_t terms = 8;
};

DirichletSetup dirichlet_setup(const CheckSpec& s) {
  DirichletSetup d;
  const auto support_max = int_param(s, "support_max", 64);
  d.n_primes = int_param(s, "n_primes", 6);
  d.terms = int_param(s, "terms", 8);
  require(support_max >= 1 && support_max <= 1'000'000, s, "support_max must lie in [1, 1e6]");
  require(d.n_primes >= 1 && d.terms >= 1, s, "n_primes and terms must be >= 1");
  d.support = smooth_numbers(support_max, d.n_primes);
  return d;
}

DirichletPoly draw_dirichlet(const CheckSpec& s, const DirichletSetup& d, std::size_t i, Rng& rng) {
  return random_dirichlet(s.space, d.support, d.terms, kind_for(i), rng);
}

/// (Σ w(n) ‖a_n‖^q)^{1/q}.
template <typename Weight>
double dirichlet_sum(const DirichletPoly& d, double q, Weight&& w) {
  double sum = 0.0;
  for (const auto& [n, a] : d) sum += w(n) * std::pow(d.space().norm(a), q);
  return std::pow(sum, 1.0 / q);
}

/// ‖f‖_{L_p} together with ‖f_m‖_{L_p} for every degree present, all on one shared sample.
struct DegreeNorms {
  NormEstimate whole;
  std::map<std::uint32_t, NormEstimate> parts;
};

DegreeNorms degree_norms(const VPoly& f, double p, const AutoNormOptions& opts) {
  std::vector<VPoly> polys{f};
  std::vector<std::uint32_t> degrees;
  for (std::uint32_t m = 0; m <= f.degree(); ++m) {
    auto part = homogeneous_part(f, m);
    if (part.empty()) continue;
    degrees.push_back(m);
    polys.push_back(std::move(part));
  }
  const auto est = lq_norms_shared(polys, std::span<const double>(&p, 1), opts);
  DegreeNorms out;
  out.whole = est[0][0];
  for (std::size_t k = 0; k < degrees.size(); ++k) out.parts[degrees[k]] = est[k + 1][0];
  return out;
}

CheckResult run_hy_dirichlet_cotype(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const double q = num_param(s, "q", 2.0);
  const double p = num_param(s, "p", 2.0);
  require(q >= 2.0 && p >= 1.0, s, "need q >= 2 and p >= 1");
  const auto setup = dirichlet_setup(s);
  const double c = certified(s, [&] { return per_degree_cotype_constant(s.space, q, p); });
  CotypeChain chain;
  try {
    chain = cotype_chain(c, q, opt_param(s, "r"));
  } catch (const Error& e) {
    throw Error(ErrorKind::config, s.name + ": " + e.what());
  }
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const DirichletPoly d = draw_dirichlet(s, setup, i, rng);
    const VPoly f = bohr_lift(d, setup.n_primes);
    const auto inst = instance_json(s, i, d.to_json());
    const auto norms = degree_norms(f, p, budget.norm_options(derive_seed(s.seed, std::to_string(i))));
    const double lhs = dirichlet_sum(d, q, [&](std::uint64_t n) { return std::pow(chain.r, omega(n)); });
    // Largest per-degree ratio seen on this instance, for comparison with the certified c.
    double measured = 0.0;
    for (const auto& [m, est] : norms.parts) {
      const auto part = homogeneous_part(f, m);
      const double coeffs = coefficient_lq(part, q);
      if (m >= 1 && est.value > 0.0) measured = std::max(measured, std::pow(coeffs / est.value, 1.0 / m));
      out.push_back(make_report(sub(s, "per_degree"), coeff_sum(coeffs), norms.whole, std::pow(c, m),
                                static_cast<int>(m), inst, {{"q", q}, {"p", p}, {"m", m}, {"c", c}}));
    }
    out.push_back(make_report(s.name, coeff_sum(lhs), norms.whole, chain.constant, static_cast<int>(f.degree()), inst,
                              {{"q", q},
                               {"p", p},
                               {"r", chain.r},
                               {"c_certified", c},
                               {"c_measured", measured},
                               {"C", chain.constant}}));
  });
}

CheckResult run_corollary_delta(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const double q = num_param(s, "q", 2.0);
  const double p = num_param(s, "p", 2.0);
  require(q >= 2.0 && p >= 1.0, s, "need q >= 2 and p >= 1");
  const auto deltas = list_param(s, "delta", {1.0});
  for (double delta : deltas) require(delta > 0.0, s, "delta must be > 0");
  const auto setup = dirichlet_setup(s);
  const double c = certified(s, [&] { return per_degree_cotype_constant(s.space, q, p); });
  CotypeChain chain;
  try {
    chain = cotype_chain(c, q, opt_param(s, "r"));
  } catch (const Error& e) {
    throw Error(ErrorKind::config, s.name + ": " + e.what());
  }
  const double q_conj = q / (q - 1.0);
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const DirichletPoly d = draw_dirichlet(s, setup, i, rng);
    const VPoly f = bohr_lift(d, setup.n_primes);
    const auto inst = instance_json(s, i, d.to_json());
    const auto rhs = lq_norm_auto(f, p, budget.norm_options(derive_seed(s.seed, std::to_string(i))));
    for (double delta : deltas) {
      const auto factor = delta_factor(delta, chain.r);
      const double c_delta = chain.constant * std::pow(factor.factor, 1.0 / q);
      const double weighted = dirichlet_sum(d, q, [&](std::uint64_t n) { return std::pow(static_cast<double>(n), -delta); });
      const double sigma = delta + 1.0 / q_conj;
      double plain = 0.0;
      double support_zeta = 0.0;
      for (const auto& [n, a] : d) {
        plain += d.space().norm(a) * std::pow(static_cast<double>(n), -sigma);
        support_zeta += std::pow(static_cast<double>(n), -(delta + 1.0));
      }
      const double zeta = std::riemann_zeta(delta + 1.0);
      const double holder = std::pow(zeta, 1.0 / q_conj);
      const nlohmann::json params = {{"q", q},        {"p", p},          {"delta", delta},
                                     {"sigma", sigma}, {"k", factor.k},   {"prime_factor", factor.factor},
                                     {"r", chain.r},   {"C_delta", c_delta}, {"zeta", zeta},
                                     {"support_zeta", support_zeta}};
      out.push_back(make_report(s.name, coeff_sum(weighted), rhs, c_delta, static_cast<int>(f.degree()), inst, params));
      out.push_back(make_report(sub(s, "holder"), coeff_sum(plain), coeff_sum(weighted), holder, 0, inst, params));
      out.push_back(make_report(sub(s, "fractalosa"), coeff_sum(plain), rhs, c_delta * holder,
                                static_cast<int>(f.degree()), inst, params));
    }
  });
}

CheckResult run_hy_dirichlet_type(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const double p = num_param(s, "p", 2.0);
  const double q_out = num_param(s, "q", 2.0);
  require(p >= 1.0 && p <= 2.0 && q_out >= 1.0, s, "need 1 <= p <= 2 and q >= 1");
  const auto setup = dirichlet_setup(s);
  const double t = certified(s, [&] { return per_degree_type_constant(s.space, p, q_out); });
  TypeChain chain;
  try {
    chain = type_chain(t, p, opt_param(s, "R"));
  } catch (const Error& e) {
    throw Error(ErrorKind::config, s.name + ": " + e.what());
  }
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const DirichletPoly d = draw_dirichlet(s, setup, i, rng);
    const VPoly f = bohr_lift(d, setup.n_primes);
    const auto inst = instance_json(s, i, d.to_json());
    const auto norms = degree_norms(f, q_out, budget.norm_options(derive_seed(s.seed, std::to_string(i))));
    for (const auto& [m, est] : norms.parts) {
      const auto part = homogeneous_part(f, m);
      out.push_back(make_report(sub(s, "per_degree"), est, coeff_sum(coefficient_lq(part, p)), std::pow(t, m),
                                static_cast<int>(m), inst, {{"p", p}, {"q", q_out}, {"m", m}, {"t", t}}));
    }
    const double rhs = dirichlet_sum(d, p, [&](std::uint64_t n) { return std::pow(chain.big_r, omega(n)); });
    out.push_back(make_report(s.name, norms.whole, coeff_sum(rhs), chain.constant, static_cast<int>(f.degree()), inst,
                              {{"p", p}, {"q", q_out}, {"R", chain.big_r}, {"t_certified", t}, {"C", chain.constant},
                               {"note", "type-side chain mirrors the cotype construction"}}));
  });
}

// ---- convexity and Bohr radius ----------------------------------------------------------------

CheckResult run_plconvexity(const CheckSpec& s, const Budget& budget, unsigned) {
  const double q = num_param(s, "q", 2.0);
  require(q >= 2.0, s, "q must be >= 2");
  const std::size_t samples = std::max<std::size_t>(1, s.instances);
  double best = std::numeric_limits<double>::infinity();
  nlohmann::json witness;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = make_stream(s.seed, i);
    const auto xy = coefficients(s.space.dim(), 2, kind_for(i) == InstanceKind::single_monomial ? InstanceKind::generic
                                                                                                  : kind_for(i), rng);
    const Vector& x = xy[0];
    const Vector& y = xy[1];
    const double ny = s.space.norm(y);
    if (ny == 0.0) continue;
    VPoly f(s.space, 1);
    f.add_term(MultiIndex{0}, x);
    f.add_term(MultiIndex{1}, y);
    const auto integral = lq_norm_auto(f, q, budget.norm_options(derive_seed(s.seed, std::to_string(i))));
    const double lambda = (std::pow(integral.value, q) - std::pow(s.space.norm(x), q)) / std::pow(ny, q);
    if (lambda < best) {
      best = lambda;
      witness = {{"x", vector_to_json(x)}, {"y", vector_to_json(y)}, {"integral", integral.to_json()}};
    }
  }
  ConstantEstimate e;
  e.name = "plconvex_lambda";
  e.value = best;
  e.direction = ConstantDirection::upper_witness;
  e.search_budget = samples;
  e.seed = s.seed;
  e.witness = witness;
  e.params = {{"q", q}, {"check", s.name}};
  CheckResult r;
  r.constants.push_back(std::move(e));
  return r;
}

struct IsenbeckSides {
  double lhs = 0.0;
  double dirichlet_lhs = 0.0;
};

IsenbeckSides isenbeck_sides(const VPoly& p, double q, double rho) {
  IsenbeckSides out;
  out.lhs = weighted_coefficients(p, q, [&](const MultiIndex& a) { return std::pow(rho, q * a.degree()); });
  const auto d = bohr_push(p);
  out.dirichlet_lhs = dirichlet_sum(d, q, [&](std::uint64_t n) { return std::pow(rho, q * omega(n)); });
  return out;
}

CheckResult run_isenbeck(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const double q = num_param(s, "q", 2.0);
  const std::string mode = str_param(s, "mode", "check");
  const auto n_max = int_param(s, "n_max", 2);
  const auto m_max = int_param(s, "m_max", 2);
  require(q >= 1.0 && n_max >= 1, s, "need q >= 1 and n_max >= 1");
  require(mode == "check" || mode == "search", s, "mode must be check or search");

  auto draw_poly = [&](std::size_t i, Rng& rng) {
    const auto n = draw(rng, 1, n_max);
    const auto m = draw(rng, 0, m_max);
    return random_vpoly(s.space, n, m, false, false, kind_for(i), rng);
  };
  auto check_at = [&](double rho, std::string_view suffix, std::size_t offset) {
    CheckSpec shifted = s;
    shifted.name = suffix.empty() ? s.name : sub(s, suffix);
    return per_instance(shifted, jobs, [&](std::size_t i, Rng&, std::vector<InequalityReport>& out) {
      Rng rng = make_stream(s.seed, offset + i);
      const VPoly p = draw_poly(offset + i, rng);
      const auto inst = instance_json(shifted, i, p.to_json());
      const auto rhs = lq_norm_auto(p, q, budget.norm_options(derive_seed(s.seed, std::to_string(offset + i))));
      const auto sides = isenbeck_sides(p, q, rho);
      const nlohmann::json params = {{"q", q}, {"rho", rho}};
      out.push_back(make_report(shifted.name, coeff_sum(sides.lhs), rhs, 1.0, static_cast<int>(p.degree()), inst, params));
      out.push_back(make_report(shifted.name + "/dirichlet", coeff_sum(sides.dirichlet_lhs), rhs, 1.0,
                                static_cast<int>(p.degree()), inst, params));
    });
  };

  if (mode == "check") {
    const double rho = num_param(s, "rho", 1.0);
    require(rho > 0.0 && rho <= 1.0, s, "rho must lie in (0, 1]");
    return check_at(rho, "", 0);
  }

  // Search: the largest rho in [0, 1] surviving every instance. The running minimum can only
  // decrease as instances are added.
  std::vector<double> survivors = parallel_map(s.instances, jobs, [&](std::size_t i) {
    Rng rng = make_stream(s.seed, i);
    const VPoly p = draw_poly(i, rng);
    const double rhs = lq_norm_auto(p, q, budget.norm_options(derive_seed(s.seed, std::to_string(i)))).value;
    auto ok = [&](double rho) { return isenbeck_sides(p, q, rho).lhs <= rhs; };
    if (ok(1.0)) return 1.0;
    double lo = 0.0;
    double hi = 1.0;
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      (ok(mid) ? lo : hi) = mid;
    }
    return lo;
  });
  double rho = 1.0;
  nlohmann::json trail = nlohmann::json::array();
  for (double v : survivors) {
    rho = std::min(rho, v);
    trail.push_back(rho);
  }
  const double holdout = num_param(s, "holdout_factor", 0.9) * rho;
  CheckResult r;
  if (holdout > 0.0) {
    r = check_at(holdout, "holdout", s.instances);
  } else {
    r.reports.push_back(skipped_report(sub(s, "holdout"), {{"check", s.name}, {"holdout", 0.0}},
                                       "empirical radius is 0; no holdout inequality to test"));
  }
  ConstantEstimate e;
  e.name = "bohr_rho";
  e.value = rho;
  e.direction = ConstantDirection::upper_witness;
  e.search_budget = s.instances;
  e.seed = s.seed;
  e.params = {{"q", q}, {"check", s.name}, {"running_min", trail}, {"holdout_rho", holdout}};
  r.constants.push_back(std::move(e));
  return r;
}

// ---- projections ------------------------------------------------------------------------------

CheckResult run_rademacher_projection(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const auto n = int_param(s, "n", 6);
  const auto m_max = int_param(s, "m_max", 3);
  require(n >= 1 && n <= budget.cube_max_vars, s, "n must lie in [1, budget.cube_max_vars]");
  const double bound = certified(s, [&] { return hilbert_distortion(s.space); });
  const std::size_t trials = std::max<std::size_t>(1, s.instances);
  CheckResult r;
  std::vector<double> logs;
  for (std::uint32_t m = 0; m <= std::min(m_max, n); ++m) {
    const double est = rademacher_projection_norm(s.space, n, m, trials, derive_seed(s.seed, "m" + std::to_string(m)), jobs);
    logs.push_back(est > 0.0 ? std::log(est) : -std::numeric_limits<double>::infinity());
    r.reports.push_back(make_report(s.name, NormEstimate::exact_value(est), NormEstimate::exact_value(1.0), bound,
                                    static_cast<int>(m), {{"check", s.name}, {"m", m}, {"n", n}},
                                    {{"m", m}, {"n", n}, {"trials", trials}, {"log_estimate", logs.back()}}));
  }
  sort_reports(r.reports);
  return r;
}

CheckResult run_lemma3_bound(const CheckSpec& s, const Budget& budget, unsigned jobs) {
  const double q = num_param(s, "q", 2.0);
  const auto n_max = int_param(s, "n_max", 6);
  const auto m_max = int_param(s, "m_max", 6);
  require(q >= 1.0 && n_max >= 1 && n_max <= budget.cube_max_vars, s, "need q >= 1 and 1 <= n_max <= cube_max_vars");
  require(m_max <= static_cast<std::uint32_t>(kMaxHilbertOrder), s, "m_max must be <= 20");
  return per_instance(s, jobs, [&](std::size_t i, Rng& rng, std::vector<InequalityReport>& out) {
    const auto n = draw(rng, 1, n_max);
    const auto m = draw(rng, 0, std::min(m_max, n));
    const auto k = draw(rng, 0, m);
    const WalshPoly w = random_walsh(s.space, n, m, false, kind_for(i), rng);
    const auto lhs = cube_lq_exact(lemma3_projection(w, k, static_cast<int>(m)), q);
    const auto rhs = cube_lq_exact(w, q);
    out.push_back(make_report(s.name, lhs, rhs, lemma3_envelope(static_cast<int>(m)), static_cast<int>(m),
                              instance_json(s, i, w.to_json()),
                              {{"q", q}, {"k", k}, {"m", m}, {"B", m == 0 ? 1.0 : std::pow(lemma3_envelope(static_cast<int>(m)), 1.0 / m)}}));
  });
}

// ---- combinatorics ----------------------------------------------------------------------------

CheckResult run_combinatorics(const CheckSpec& s, const Budget&, unsigned) {
  const auto n_max = int_param(s, "n_max", 10);
  const auto km_max = int_param(s, "km_max", 40);
  require(n_max <= 20, s, "n_max must be <= 20");
  CheckResult r;
  for (int n = 1; n <= static_cast<int>(n_max); ++n) {
    double mismatches = 0;
    for (int m = 1; m <= n; ++m) {
      for (int k = 1; k <= n; ++k) {
        const auto counts = combinatorial_identity_check(n, m, k);
        if (counts.count_lhs != counts.count_rhs || !counts.all_subsets_agree) ++mismatches;
      }
    }
    // Weighted form with values indexed by subset.
    if (n <= 8) {
      Rng rng = make_stream(s.seed, static_cast<std::uint64_t>(n));
      std::vector<long> values(std::size_t{1} << n);
      for (auto& v : values) v = static_cast<long>(rng() % 1000);
      for (int m = 1; m <= n; ++m) {
        for (int k = 1; k <= n; ++k) {
          if (subset_triple_sum(n, m, k, values) != subset_weighted_total(n, m, k, values)) ++mismatches;
        }
      }
    }
    r.reports.push_back(exact_zero_report(sub(s, "identity"), mismatches, {{"check", s.name}, {"n", n}}, {{"n", n}}));
  }
  for (int m = 1; m <= static_cast<int>(km_max); ++m) {
    for (int k = 1; k * m <= static_cast<int>(km_max); ++k) {
      const double ratio = stirling_ratio(k * m, m, k);
      const nlohmann::json inst = {{"check", s.name}, {"m", m}, {"k", k}};
      const nlohmann::json params = {{"m", m}, {"k", k}, {"n", k * m}};
      r.reports.push_back(make_report(sub(s, "stirling_upper"), NormEstimate::exact_value(ratio),
                                      NormEstimate::exact_value(1.0), 4.0, 0, inst, params));
      r.reports.push_back(make_report(sub(s, "stirling_lower"), NormEstimate::exact_value(0.5),
                                      NormEstimate::exact_value(ratio), 1.0, 0, inst, params));
    }
  }
  sort_reports(r.reports);
  return r;
}

// ---- registry ---------------------------------------------------------------------------------

using Runner = std::function<CheckResult(const CheckSpec&, const Budget&, unsigned)>;

const std::map<std::string, Runner, std::less<>>& registry() {
  static const std::map<std::string, Runner, std::less<>> table{
      {"bohr_roundtrip", run_bohr_roundtrip},
      {"hilbert_exactness", run_hilbert_exactness},
      {"projection_oracle", run_projection_oracle},
      {"parseval_triangulation", run_parseval},
      {"lemma1_bridge", run_lemma1_bridge},
      {"kahane", run_kahane},
      {"walsh_kahane", run_walsh_kahane},
      {"cotype_def", run_cotype_def},
      {"type_def", run_type_def},
      {"cotype_constant", [](const CheckSpec& s, const Budget& b, unsigned) { return run_constant(s, b, true); }},
      {"type_constant", [](const CheckSpec& s, const Budget& b, unsigned) { return run_constant(s, b, false); }},
      {"hypercontractive_cotype", run_hypercontractive},
      {"hy_dirichlet_cotype", run_hy_dirichlet_cotype},
      {"corollary_delta", run_corollary_delta},
      {"hy_dirichlet_type", run_hy_dirichlet_type},
      {"plconvexity", run_plconvexity},
      {"isenbeck", run_isenbeck},
      {"rademacher_projection", run_rademacher_projection},
      {"lemma3_bound", run_lemma3_bound},
      {"combinatorics", run_combinatorics},
  };
  return table;
}

CheckSpec make_spec(std::string kind, const NormedSpace& space, nlohmann::json params, std::size_t instances,
                    std::uint64_t seed) {
  CheckSpec s;
  s.name = kind;
  s.kind = std::move(kind);
  s.space = space;
  s.params = std::move(params);
  s.instances = instances;
  s.seed = seed;
  return s;
}

}  // namespace

std::vector<std::string> check_kinds() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

bool is_check_kind(std::string_view kind) { return registry().find(kind) != registry().end(); }

CheckResult run_check(const CheckSpec& spec, const Budget& budget, unsigned jobs) {
  const auto it = registry().find(spec.kind);
  if (it == registry().end()) throw Error(ErrorKind::config, "unknown check kind '" + spec.kind + "'");
  if (!spec.params.is_object()) throw Error(ErrorKind::config, spec.name + ": params must be an object");
  return it->second(spec, budget, jobs);
}

CheckResult check_cotype_def(const NormedSpace& space, double q, std::size_t n, std::size_t instances,
                             std::uint64_t seed, const Budget& budget) {
  return run_check(make_spec("cotype_def", space, {{"q", q}, {"n", n}}, instances, seed), budget);
}

CheckResult check_hypercontractive_cotype(const NormedSpace& space, double q, std::uint32_t m, std::size_t n,
                                          std::optional<double> c_hyp, std::string_view mode, std::size_t instances,
                                          std::uint64_t seed, const Budget& budget) {
  nlohmann::json params = {{"q", q}, {"m_max", m}, {"n_max", n}, {"mode", std::string(mode)}};
  if (c_hyp) params["C_hyp"] = *c_hyp;
  return run_check(make_spec("hypercontractive_cotype", space, params, instances, seed), budget);
}

CheckResult check_lemma1_bridge(const NormedSpace& space, double q, std::uint32_t m, std::size_t n,
                                std::size_t instances, std::uint64_t seed, const Budget& budget) {
  return run_check(make_spec("lemma1_bridge", space, {{"q", q}, {"m_max", m}, {"n_max", n}}, instances, seed), budget);
}

CheckResult check_hy_dirichlet_cotype(const NormedSpace& space, double q, double p, std::optional<double> r,
                                      std::size_t instances, std::uint64_t seed, const Budget& budget) {
  nlohmann::json params = {{"q", q}, {"p", p}};
  if (r) params["r"] = *r;
  return run_check(make_spec("hy_dirichlet_cotype", space, params, instances, seed), budget);
}

CheckResult check_corollary_delta(const NormedSpace& space, double q, double p, double delta, std::size_t instances,
                                  std::uint64_t seed, const Budget& budget) {
  return run_check(make_spec("corollary_delta", space, {{"q", q}, {"p", p}, {"delta", delta}}, instances, seed), budget);
}

CheckResult check_hy_dirichlet_type(const NormedSpace& space, double p, double q_out, std::optional<double> big_r,
                                    std::size_t instances, std::uint64_t seed, const Budget& budget) {
  nlohmann::json params = {{"p", p}, {"q", q_out}};
  if (big_r) params["R"] = *big_r;
  return run_check(make_spec("hy_dirichlet_type", space, params, instances, seed), budget);
}

CheckResult check_plconvexity(const NormedSpace& space, double q, std::size_t samples, std::uint64_t seed,
                              const Budget& budget) {
  return run_check(make_spec("plconvexity", space, {{"q", q}}, samples, seed), budget);
}

CheckResult check_isenbeck(const NormedSpace& space, double q, double rho, std::size_t instances, std::uint64_t seed,
                           const Budget& budget) {
  return run_check(make_spec("isenbeck", space, {{"q", q}, {"rho", rho}}, instances, seed), budget);
}

}  // namespace polytor::harness
