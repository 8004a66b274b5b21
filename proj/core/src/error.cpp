#include "polytor/error.hpp"

namespace polytor {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::dimension_mismatch: return "dimension_mismatch";
    case ErrorKind::domain: return "domain";
    case ErrorKind::prime_out_of_table: return "prime_out_of_table";
    case ErrorKind::not_tetrahedral: return "not_tetrahedral";
    case ErrorKind::not_homogeneous: return "not_homogeneous";
    case ErrorKind::not_euclidean: return "not_euclidean";
    case ErrorKind::budget_exceeded: return "budget_exceeded";
    case ErrorKind::guard_exceeded: return "guard_exceeded";
    case ErrorKind::overflow: return "overflow";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

PrimeOutOfTableError::PrimeOutOfTableError(std::uint64_t prime, std::size_t n_primes)
    : Error(ErrorKind::prime_out_of_table,
            "prime " + std::to_string(prime) + " is not among the first " +
                std::to_string(n_primes) + " primes"),
      prime_(prime),
      n_primes_(n_primes) {}

}  // namespace polytor
