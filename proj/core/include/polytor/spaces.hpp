#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace polytor {

using Complex = std::complex<double>;

/// An exponent in [1, ∞]. Infinity is a distinguished state, never a large float.
class Exponent {
 public:
  /// Throws Error(domain) unless 1 <= value (value may be +inf).
  explicit Exponent(double value);

  static Exponent infinity() noexcept { return Exponent(Tag{}); }

  bool is_infinite() const noexcept { return infinite_; }
  /// +inf for the infinite exponent.
  double value() const noexcept;
  /// 1/r, with 1/∞ = 0.
  double reciprocal() const noexcept;

  bool operator==(const Exponent& other) const noexcept = default;

 private:
  struct Tag {};
  explicit Exponent(Tag) noexcept : value_(0.0), infinite_(true) {}

  double value_;
  bool infinite_;
};

/// r' with 1/r + 1/r' = 1; 1 ↦ ∞ and ∞ ↦ 1.
Exponent conjugate_exponent(Exponent r);
/// Convenience overload; throws Error(domain) for r < 1.
Exponent conjugate_exponent(double r);

/// Coordinates of an element of a finite-dimensional complex space.
class Vector {
 public:
  Vector() = default;
  explicit Vector(std::size_t dim) : coords_(dim) {}
  Vector(std::initializer_list<Complex> coords) : coords_(coords) {}
  explicit Vector(std::vector<Complex> coords) : coords_(std::move(coords)) {}

  static Vector zeros(std::size_t dim) { return Vector(dim); }

  std::size_t size() const noexcept { return coords_.size(); }
  Complex& operator[](std::size_t i) { return coords_[i]; }
  const Complex& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Complex> coords() const noexcept { return coords_; }
  std::span<Complex> coords() noexcept { return coords_; }
  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const noexcept;

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(Complex scalar) noexcept;
  /// this += scalar * other.
  void add_scaled(const Vector& other, Complex scalar);

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(Complex s, Vector v) { return v *= s; }
  friend Vector operator*(Vector v, Complex s) { return v *= s; }
  friend Vector operator-(Vector v) { return v *= Complex(-1.0, 0.0); }

  bool operator==(const Vector& other) const = default;

 private:
  std::vector<Complex> coords_;
};

enum class SpaceFamily { ellp, euclidean, custom };

using NormOracle = std::function<double(std::span<const Complex>)>;

/// Constants with ‖x‖_X <= upper·‖x‖₂ and ‖x‖₂ <= lower·‖x‖_X for every x.
/// Their product is the Banach–Mazur style distortion to the Hilbert space of the same dimension.
struct Distortion {
  double upper = 1.0;
  double lower = 1.0;

  double product() const noexcept { return upper * lower; }
};

/// A finite-dimensional complex normed space. Immutable; copies share the norm oracle.
class NormedSpace {
 public:
  static NormedSpace ellp(Exponent p, std::size_t dim);
  static NormedSpace ellp(double p, std::size_t dim) { return ellp(Exponent(p), dim); }
  static NormedSpace euclidean(std::size_t dim);
  /// The oracle must be a norm; only sampled invariants are ever checked.
  static NormedSpace custom(std::string label, std::size_t dim, NormOracle oracle,
                            std::optional<Distortion> distortion = std::nullopt);

  std::size_t dim() const noexcept { return dim_; }
  SpaceFamily family() const noexcept { return family_; }
  /// ellp exponent; 2 for euclidean. Throws Error(domain) for custom spaces.
  Exponent p() const;
  /// True for euclidean and ellp(2).
  bool is_hilbert() const noexcept;
  std::optional<Distortion> distortion() const;
  std::string describe() const;

  /// Throws Error(dimension_mismatch) when the lengths differ.
  double norm(std::span<const Complex> v) const;
  double norm(const Vector& v) const { return norm(v.coords()); }

  nlohmann::json to_json() const;
  /// Accepts {"family":"ellp","p":...,"dim":...} (p may be "inf") and {"family":"euclidean","dim":...}.
  static NormedSpace from_json(const nlohmann::json& j);

  bool operator==(const NormedSpace& other) const noexcept;

 private:
  NormedSpace(SpaceFamily family, std::size_t dim, Exponent p, std::string label,
              std::shared_ptr<const NormOracle> oracle, std::optional<Distortion> distortion);

  SpaceFamily family_;
  std::size_t dim_;
  Exponent p_;
  std::string label_;
  std::shared_ptr<const NormOracle> oracle_;
  std::optional<Distortion> distortion_;
};

/// (Σ|v_i|^p)^{1/p}, or max |v_i| for p = ∞.
double ellp_norm(std::span<const Complex> v, Exponent p) noexcept;

}  // namespace polytor
