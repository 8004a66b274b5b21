#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polytor {

enum class ErrorKind {
  dimension_mismatch,
  domain,
  prime_out_of_table,
  not_tetrahedral,
  not_homogeneous,
  not_euclidean,
  budget_exceeded,
  guard_exceeded,
  overflow,
  config,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class PrimeOutOfTableError : public Error {
 public:
  PrimeOutOfTableError(std::uint64_t prime, std::size_t n_primes);

  std::uint64_t prime() const noexcept { return prime_; }
  std::size_t n_primes() const noexcept { return n_primes_; }

 private:
  std::uint64_t prime_;
  std::size_t n_primes_;
};

}  // namespace polytor
