#include "polytor/spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "polytor/error.hpp"

namespace polytor {

Exponent::Exponent(double value) : value_(value), infinite_(std::isinf(value) && value > 0) {
  if (std::isnan(value) || value < 1.0) {
    throw Error(ErrorKind::domain, "exponent must lie in [1, inf], got " + std::to_string(value));
  }
  if (infinite_) value_ = 0.0;
}

double Exponent::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : value_;
}

double Exponent::reciprocal() const noexcept { return infinite_ ? 0.0 : 1.0 / value_; }

Exponent conjugate_exponent(Exponent r) {
  if (r.is_infinite()) return Exponent(1.0);
  if (r.value() == 1.0) return Exponent::infinity();
  return Exponent(r.value() / (r.value() - 1.0));
}

Exponent conjugate_exponent(double r) { return conjugate_exponent(Exponent(r)); }

bool Vector::is_zero() const noexcept {
  return std::all_of(coords_.begin(), coords_.end(), [](Complex c) { return c == Complex{}; });
}

Vector& Vector::operator+=(const Vector& other) {
  if (other.size() != size()) throw Error(ErrorKind::dimension_mismatch, "vector sum");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  if (other.size() != size()) throw Error(ErrorKind::dimension_mismatch, "vector difference");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
  return *this;
}

Vector& Vector::operator*=(Complex scalar) noexcept {
  for (auto& c : coords_) c *= scalar;
  return *this;
}

void Vector::add_scaled(const Vector& other, Complex scalar) {
  if (other.size() != size()) throw Error(ErrorKind::dimension_mismatch, "vector axpy");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += scalar * other.coords_[i];
}

double ellp_norm(std::span<const Complex> v, Exponent p) noexcept {
  if (p.is_infinite()) {
    double m = 0.0;
    for (const auto& c : v) m = std::max(m, std::abs(c));
    return m;
  }
  const double pv = p.value();
  if (pv == 1.0) {
    double s = 0.0;
    for (const auto& c : v) s += std::abs(c);
    return s;
  }
  if (pv == 2.0) {
    double s = 0.0;
    for (const auto& c : v) s += std::norm(c);
    return std::sqrt(s);
  }
  // Scale by the max modulus so large p cannot overflow.
  double m = 0.0;
  for (const auto& c : v) m = std::max(m, std::abs(c));
  if (m == 0.0) return 0.0;
  double s = 0.0;
  for (const auto& c : v) s += std::pow(std::abs(c) / m, pv);
  return m * std::pow(s, 1.0 / pv);
}

NormedSpace::NormedSpace(SpaceFamily family, std::size_t dim, Exponent p, std::string label,
                         std::shared_ptr<const NormOracle> oracle,
                         std::optional<Distortion> distortion)
    : family_(family),
      dim_(dim),
      p_(p),
      label_(std::move(label)),
      oracle_(std::move(oracle)),
      distortion_(distortion) {}

namespace {

Distortion ellp_distortion(Exponent p, std::size_t dim) {
  const double d = static_cast<double>(dim);
  const double inv = p.reciprocal();
  if (inv >= 0.5) return {std::pow(d, inv - 0.5), 1.0};
  return {1.0, std::pow(d, 0.5 - inv)};
}

}  // namespace

NormedSpace NormedSpace::ellp(Exponent p, std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::domain, "space dimension must be positive");
  return NormedSpace(SpaceFamily::ellp, dim, p, {}, nullptr, ellp_distortion(p, dim));
}

NormedSpace NormedSpace::euclidean(std::size_t dim) {
  if (dim == 0) throw Error(ErrorKind::domain, "space dimension must be positive");
  return NormedSpace(SpaceFamily::euclidean, dim, Exponent(2.0), {}, nullptr, Distortion{});
}

NormedSpace NormedSpace::custom(std::string label, std::size_t dim, NormOracle oracle,
                                std::optional<Distortion> distortion) {
  if (dim == 0) throw Error(ErrorKind::domain, "space dimension must be positive");
  if (!oracle) throw Error(ErrorKind::domain, "custom space needs a norm oracle");
  return NormedSpace(SpaceFamily::custom, dim, Exponent(1.0), std::move(label),
                     std::make_shared<const NormOracle>(std::move(oracle)), distortion);
}

Exponent NormedSpace::p() const {
  if (family_ == SpaceFamily::custom) throw Error(ErrorKind::domain, "custom space has no exponent");
  return p_;
}

bool NormedSpace::is_hilbert() const noexcept {
  return family_ == SpaceFamily::euclidean ||
         (family_ == SpaceFamily::ellp && !p_.is_infinite() && p_.value() == 2.0);
}

std::optional<Distortion> NormedSpace::distortion() const { return distortion_; }

std::string NormedSpace::describe() const {
  std::ostringstream os;
  switch (family_) {
    case SpaceFamily::euclidean: os << "euclidean^" << dim_; break;
    case SpaceFamily::ellp:
      os << "l_";
      if (p_.is_infinite()) os << "inf"; else os << p_.value();
      os << "^" << dim_;
      break;
    case SpaceFamily::custom: os << "custom(" << label_ << ")^" << dim_; break;
  }
  return os.str();
}

double NormedSpace::norm(std::span<const Complex> v) const {
  if (v.size() != dim_) {
    throw Error(ErrorKind::dimension_mismatch, "vector of length " + std::to_string(v.size()) +
                                                   " in space of dimension " + std::to_string(dim_));
  }
  if (family_ == SpaceFamily::custom) return (*oracle_)(v);
  return ellp_norm(v, p_);
}

nlohmann::json NormedSpace::to_json() const {
  nlohmann::json j;
  switch (family_) {
    case SpaceFamily::euclidean: j["family"] = "euclidean"; break;
    case SpaceFamily::ellp:
      j["family"] = "ellp";
      if (p_.is_infinite()) j["p"] = "inf"; else j["p"] = p_.value();
      break;
    case SpaceFamily::custom:
      j["family"] = "custom";
      j["label"] = label_;
      break;
  }
  j["dim"] = dim_;
  return j;
}

NormedSpace NormedSpace::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorKind::config, "space descriptor must be an object");
  if (!j.contains("family") || !j["family"].is_string())
    throw Error(ErrorKind::config, "space descriptor needs a string 'family'");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() <= 0)
    throw Error(ErrorKind::config, "space descriptor needs a positive integer 'dim'");
  const auto dim = j["dim"].get<std::size_t>();
  const auto family = j["family"].get<std::string>();
  if (family == "euclidean") return euclidean(dim);
  if (family == "ellp") {
    if (!j.contains("p")) throw Error(ErrorKind::config, "ellp space needs 'p'");
    const auto& p = j["p"];
    if (p.is_string()) {
      const auto s = p.get<std::string>();
      if (s == "inf" || s == "infinity") return ellp(Exponent::infinity(), dim);
      throw Error(ErrorKind::config, "unrecognised exponent '" + s + "'");
    }
    if (!p.is_number()) throw Error(ErrorKind::config, "'p' must be a number or \"inf\"");
    try {
      return ellp(Exponent(p.get<double>()), dim);
    } catch (const Error& e) {
      throw Error(ErrorKind::config, e.what());
    }
  }
  throw Error(ErrorKind::config, "unsupported space family '" + family + "'");
}

bool NormedSpace::operator==(const NormedSpace& other) const noexcept {
  return family_ == other.family_ && dim_ == other.dim_ && p_ == other.p_ &&
         label_ == other.label_ && oracle_ == other.oracle_;
}

}  // namespace polytor
