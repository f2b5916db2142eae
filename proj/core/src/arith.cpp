#include "murmur/arith.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>

#include "murmur/error.hpp"

namespace murmur::arith {

std::uint64_t PrimePower::value() const noexcept {
  std::uint64_t v = 1;
  for (int i = 0; i < exponent; ++i) v *= prime;
  return v;
}

ArithTables::ArithTables(std::uint64_t limit) {
  if (limit < 2) throw DomainError("sieve limit must be at least 2");
  // spf_ is indexed up to limit inclusive, so limit itself must be storable
  // and limit + 1 must not wrap the vector size on 32-bit platforms.
  if (limit >= std::numeric_limits<std::uint32_t>::max() ||
      limit >= std::numeric_limits<std::size_t>::max() / sizeof(std::uint32_t)) {
    throw SizeError("sieve limit " + std::to_string(limit) +
                    " overflows 32-bit table entries");
  }
  limit_ = static_cast<std::uint32_t>(limit);
  spf_.assign(static_cast<std::size_t>(limit_) + 1, 0);

  // Linear sieve: every composite is struck exactly once by its spf.
  for (std::uint32_t i = 2; i <= limit_; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = i;
      primes_.push_back(i);
    }
    for (std::uint32_t p : primes_) {
      const std::uint64_t composite = static_cast<std::uint64_t>(p) * i;
      if (p > spf_[i] || composite > limit_) break;
      spf_[composite] = p;
    }
  }
}

ArithTables sieve(std::uint64_t limit) { return ArithTables(limit); }

void ArithTables::check_range(std::uint64_t n) const {
  if (n == 0 || n > limit_) {
    throw DomainError("argument " + std::to_string(n) +
                      " outside table range [1, " + std::to_string(limit_) +
                      "]");
  }
}

std::uint32_t ArithTables::smallest_prime_factor(std::uint64_t n) const {
  check_range(n);
  if (n == 1) throw DomainError("1 has no prime factor");
  return spf_[n];
}

bool ArithTables::is_prime(std::uint64_t n) const {
  if (n < 2) return false;
  check_range(n);
  return spf_[n] == n;
}

std::vector<PrimePower> ArithTables::factor(std::uint64_t n) const {
  check_range(n);
  std::vector<PrimePower> out;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  return out;
}

int ArithTables::mobius(std::uint64_t n) const {
  int sign = 1;
  for (const auto& pp : factor(n)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

std::uint64_t ArithTables::euler_phi(std::uint64_t n) const {
  std::uint64_t phi = 1;
  for (const auto& pp : factor(n)) {
    phi *= pp.value() / pp.prime * (pp.prime - 1);
  }
  return phi;
}

std::uint64_t ArithTables::divisor_sigma(std::uint64_t n) const {
  std::uint64_t sigma = 1;
  for (const auto& pp : factor(n)) {
    std::uint64_t term = 1;
    std::uint64_t power = 1;
    for (int i = 0; i < pp.exponent; ++i) {
      power *= pp.prime;
      term += power;
    }
    sigma *= term;
  }
  return sigma;
}

std::uint64_t ArithTables::divisor_count(std::uint64_t n) const {
  std::uint64_t tau = 1;
  for (const auto& pp : factor(n)) tau *= static_cast<std::uint64_t>(pp.exponent + 1);
  return tau;
}

bool ArithTables::is_squarefree(std::uint64_t n) const {
  return mobius(n) != 0;
}

std::span<const std::uint32_t> ArithTables::primes_between(
    std::uint64_t lo, std::uint64_t hi) const {
  auto first = std::lower_bound(primes_.begin(), primes_.end(), lo);
  auto last = std::upper_bound(first, primes_.end(), hi);
  return {first, last};
}

std::int64_t mod(std::int64_t a, std::int64_t m) noexcept {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = mod(a, m), r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) {
    throw DomainError(std::to_string(a) + " is not invertible modulo " +
                      std::to_string(m));
  }
  return mod(old_s, m);
}

int kronecker(std::int64_t d, std::int64_t n) noexcept {
  // Cohen, Algorithm 1.4.10, extended to n < 0 and n = 0.
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;

  int result = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) result = -result;
  }

  // Work with unsigned magnitudes so INT64_MIN is harmless.
  std::uint64_t b = static_cast<std::uint64_t>(n);
  if (b % 2 == 0 && d % 2 == 0) return 0;

  int twos = 0;
  while (b % 2 == 0) {
    b /= 2;
    ++twos;
  }
  if (twos % 2 == 1) {
    const std::int64_t r8 = mod(d, 8);
    if (r8 == 3 || r8 == 5) result = -result;
  }

  // Now b is odd and positive; reduce a = d mod b into [0, b).
  if (b == 1) return result;
  const std::int64_t bs = static_cast<std::int64_t>(b);
  std::uint64_t a = static_cast<std::uint64_t>(mod(d, bs));

  while (a != 0) {
    int v = 0;
    while (a % 2 == 0) {
      a /= 2;
      ++v;
    }
    if (v % 2 == 1 && (b % 8 == 3 || b % 8 == 5)) result = -result;
    if (a % 4 == 3 && b % 4 == 3) result = -result;
    const std::uint64_t r = b % a;
    b = a;
    a = r;
  }
  return b == 1 ? result : 0;
}

}  // namespace murmur::arith
