#include "polytor/projections.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "polytor/error.hpp"
#include "polytor/norms.hpp"
#include "polytor/parallel.hpp"
#include "polytor/random.hpp"

namespace polytor {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, mpq_class(0)) {}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out.at(i, i) = 1;
  return out;
}

bool RationalMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if (at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

mpq_class RationalMatrix::max_abs() const {
  mpq_class best = 0;
  for (const auto& e : entries_) best = std::max(best, mpq_class(abs(e)));
  return best;
}

nlohmann::json RationalMatrix::to_json() const {
  auto rows = nlohmann::json::array();
  for (std::size_t i = 0; i < rows_; ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < cols_; ++j) {
      const auto& e = at(i, j);
      row.push_back(e.get_num().get_str() + "/" + e.get_den().get_str());
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix RationalMatrix::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorKind::config, "rational matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.front().size();
  RationalMatrix out(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw Error(ErrorKind::config, "rational matrix rows must have equal length");
    for (std::size_t c = 0; c < cols; ++c) {
      if (!j[i][c].is_string()) throw Error(ErrorKind::config, "rational entries are \"num/den\" strings");
      mpq_class v;
      if (v.set_str(j[i][c].get<std::string>(), 10) != 0) {
        throw Error(ErrorKind::config, "bad rational '" + j[i][c].get<std::string>() + "'");
      }
      v.canonicalize();
      out.at(i, c) = v;
    }
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::dimension_mismatch, "matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out.at(i, j) += aik * b.at(k, j);
    }
  }
  return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
}

namespace {

void require_order(int m) {
  if (m < 0) throw Error(ErrorKind::domain, "Hilbert order must be >= 0, got " + std::to_string(m));
  if (m > kMaxHilbertOrder) {
    throw Error(ErrorKind::guard_exceeded,
                "Hilbert order " + std::to_string(m) + " exceeds limit " + std::to_string(kMaxHilbertOrder));
  }
}

}  // namespace

RationalMatrix hilbert_matrix(int m) {
  if (m < 0) throw Error(ErrorKind::domain, "Hilbert order must be >= 0, got " + std::to_string(m));
  const auto n = static_cast<std::size_t>(m) + 1;
  RationalMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h.at(i, j) = mpq_class(1, static_cast<unsigned long>(i + j + 1));
  }
  return h;
}

RationalMatrix hilbert_inverse(int m) {
  require_order(m);
  const auto n = static_cast<std::size_t>(m) + 1;
  RationalMatrix a = hilbert_matrix(m);
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    // H is positive definite, so every pivot on the diagonal is nonzero.
    std::size_t pivot = col;
    while (a.at(pivot, col) == 0) ++pivot;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a.at(pivot, j), a.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    }
    const mpq_class scale = 1 / a.at(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a.at(col, j) *= scale;
      inv.at(col, j) *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a.at(i, col) == 0) continue;
      const mpq_class f = a.at(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

mpq_class ProjectionPolynomial::moment(std::size_t i) const {
  mpq_class sum = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) sum += coeffs_[k] / mpq_class(static_cast<unsigned long>(k + i + 1));
  sum.canonicalize();
  return sum;
}

double ProjectionPolynomial::eval(double t) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + it->get_d();
  return acc;
}

double ProjectionPolynomial::sup_on_grid(std::size_t points) const {
  double best = 0.0;
  for (std::size_t i = 1; i <= points; ++i) {
    best = std::max(best, std::abs(eval(static_cast<double>(i) / static_cast<double>(points + 1))));
  }
  return best;
}

std::vector<ProjectionPolynomial> projection_polynomials(int m) {
  const RationalMatrix a = hilbert_inverse(m);
  std::vector<ProjectionPolynomial> out;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    std::vector<mpq_class> coeffs(a.rows());
    for (std::size_t k = 0; k < a.rows(); ++k) coeffs[k] = a.at(k, j);
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

WalshPoly walsh_homog_filter(const WalshPoly& w, std::uint32_t k) {
  WalshPoly out(w.space(), w.n_vars());
  for (const auto& [subset, coeff] : w) {
    if (subset.size() == k) out.add_term(subset, coeff);
  }
  return out;
}

std::vector<mpq_class> lemma3_weights(std::uint32_t k, int m) {
  require_order(m);
  if (k > static_cast<std::uint32_t>(m)) {
    throw Error(ErrorKind::domain, "projection degree " + std::to_string(k) + " exceeds m = " + std::to_string(m));
  }
  const auto polys = projection_polynomials(m);
  std::vector<mpq_class> weights;
  for (int j = 0; j <= m; ++j) weights.push_back(polys[k].moment(static_cast<std::size_t>(j)));
  return weights;
}

WalshPoly lemma3_projection(const WalshPoly& w, std::uint32_t k, int m) {
  require_order(m);
  if (w.degree() > static_cast<std::uint32_t>(m)) {
    throw Error(ErrorKind::domain, "Walsh degree " + std::to_string(w.degree()) + " exceeds m = " + std::to_string(m));
  }
  WalshPoly out(w.space(), w.n_vars());
  if (k > static_cast<std::uint32_t>(m)) return out;
  const auto weights = lemma3_weights(k, m);
  for (const auto& [subset, coeff] : w) {
    const mpq_class& weight = weights[subset.size()];
    if (weight == 0) continue;
    out.add_term(subset, coeff * Complex(weight.get_d(), 0.0));
  }
  return out;
}

double lemma3_envelope(int m) {
  return static_cast<double>(m + 1) * hilbert_inverse(m).max_abs().get_d();
}

double lemma3_base(int m) {
  double base = 1.0;
  for (int j = 1; j <= m; ++j) base = std::max(base, std::pow(lemma3_envelope(j), 1.0 / j));
  return base;
}

namespace {

double projection_ratio(const WalshPoly& w, std::uint32_t m) {
  const double whole = cube_lq_exact(w, 2.0).value;
  if (whole == 0.0) return 0.0;
  return cube_lq_exact(walsh_homog_filter(w, m), 2.0).value / whole;
}

WalshPoly random_walsh(const NormedSpace& space, std::size_t n, std::uint32_t m, Rng& rng) {
  constexpr std::size_t kMaxTerms = 256;
  WalshPoly w(space, n);
  const auto top = static_cast<std::uint32_t>(std::min<std::size_t>(n, m + 2));
  if (n < 63 && (std::uint64_t{1} << n) <= kMaxTerms) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      if (static_cast<std::uint32_t>(std::popcount(mask)) <= top) {
        w.add_term(SubsetIndex::from_mask(mask), gaussian_vector(space.dim(), rng));
      }
    }
    return w;
  }
  for (std::size_t t = 0; t < kMaxTerms; ++t) {
    // Degree m is drawn at least every other term so the projection is never trivially empty.
    const std::uint32_t size = (t % 2 == 0) ? std::min<std::uint32_t>(m, top) : static_cast<std::uint32_t>(rng() % (top + 1));
    std::vector<std::uint32_t> pool(n);
    for (std::size_t i = 0; i < n; ++i) pool[i] = static_cast<std::uint32_t>(i + 1);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(size);
    std::sort(pool.begin(), pool.end());
    w.add_term(SubsetIndex(pool), gaussian_vector(space.dim(), rng));
  }
  return w;
}

}  // namespace

double rademacher_projection_norm(const NormedSpace& space, std::size_t n, std::uint32_t m, std::size_t trials,
                                  std::uint64_t seed, unsigned jobs) {
  if (n > kMaxCubeVars) throw Error(ErrorKind::budget_exceeded, "rademacher projection needs n <= 24");
  if (m > n) return 0.0;
  constexpr int kClimbSteps = 24;
  const auto best = parallel_map(trials, jobs, [&](std::size_t trial) {
    Rng rng = make_stream(seed, trial);
    WalshPoly w = random_walsh(space, n, m, rng);
    double ratio = projection_ratio(w, m);
    std::vector<SubsetIndex> keys;
    for (const auto& [subset, coeff] : w) keys.push_back(subset);
    if (keys.empty()) return ratio;
    for (int step = 0; step < kClimbSteps; ++step) {
      const auto& key = keys[rng() % keys.size()];
      const double scale = 0.5 * std::pow(0.8, step / 4);
      Vector delta = gaussian_vector(space.dim(), rng);
      delta *= Complex(scale, 0.0);
      WalshPoly candidate = w;
      candidate.add_term(key, delta);
      const double r = projection_ratio(candidate, m);
      if (r > ratio) {
        ratio = r;
        w = std::move(candidate);
      }
    }
    return ratio;
  });
  return best.empty() ? 0.0 : *std::max_element(best.begin(), best.end());
}

}  // namespace polytor
