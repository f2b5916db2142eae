#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace murmur::arith {

/// One prime power p^e in a factorization.
struct PrimePower {
  std::uint32_t prime;
  int exponent;

  std::uint64_t value() const noexcept;
};

/// Smallest-prime-factor sieve over [2, limit]. Immutable once built, so a
/// single instance can be shared across threads.
class ArithTables {
 public:
  /// Builds tables for [2, limit]. Throws DomainError for limit < 2 and
  /// SizeError when limit does not fit the 32-bit table entries.
  explicit ArithTables(std::uint64_t limit);

  std::uint32_t limit() const noexcept { return limit_; }
  std::span<const std::uint32_t> primes() const noexcept { return primes_; }

  std::uint32_t smallest_prime_factor(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const;

  /// Ascending prime-power factorization; empty for n = 1.
  std::vector<PrimePower> factor(std::uint64_t n) const;

  int mobius(std::uint64_t n) const;
  std::uint64_t euler_phi(std::uint64_t n) const;
  std::uint64_t divisor_sigma(std::uint64_t n) const;
  std::uint64_t divisor_count(std::uint64_t n) const;
  bool is_squarefree(std::uint64_t n) const;

  /// Primes p with lo <= p <= hi (clipped to the table).
  std::span<const std::uint32_t> primes_between(std::uint64_t lo,
                                                std::uint64_t hi) const;

 private:
  void check_range(std::uint64_t n) const;

  std::uint32_t limit_;
  std::vector<std::uint32_t> spf_;
  std::vector<std::uint32_t> primes_;
};

/// Convenience wrapper matching the other factory-style entry points.
ArithTables sieve(std::uint64_t limit);

/// Kronecker symbol (d | n) for all integer pairs, including negative and
/// zero arguments.
int kronecker(std::int64_t d, std::int64_t n) noexcept;

/// Least nonnegative residue of a mod m (m > 0).
std::int64_t mod(std::int64_t a, std::int64_t m) noexcept;

/// Inverse of a modulo m; a must be coprime to m. Returns 0 when m = 1.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m);

}  // namespace murmur::arith
