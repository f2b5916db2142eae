#include "murmur/families.hpp"

#include <algorithm>
#include <cmath>

#include "murmur/error.hpp"

namespace murmur::families {

namespace {

bool squarefree(std::uint64_t n) noexcept {
  if (n == 0) return false;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

// Squarefree flags for [0, hi] by crossing out multiples of p^2.
std::vector<bool> squarefree_table(std::uint64_t hi) {
  std::vector<bool> flags(hi + 1, true);
  flags[0] = false;
  for (std::uint64_t p = 2; p * p <= hi; ++p) {
    const std::uint64_t sq = p * p;
    for (std::uint64_t m = sq; m <= hi; m += sq) flags[m] = false;
  }
  return flags;
}

bool fundamental_with(std::int64_t d, const std::vector<bool>& sqfree) {
  if (d == 0 || d == 1) return false;
  const std::int64_t r = arith::mod(d, 4);
  const auto abs_d = static_cast<std::uint64_t>(d < 0 ? -d : d);
  if (r == 1) return sqfree[abs_d];
  if (r != 0) return false;
  const std::int64_t m = d / 4;
  const std::int64_t rm = arith::mod(m, 4);
  return (rm == 2 || rm == 3) && sqfree[abs_d / 4];
}

}  // namespace

bool is_fundamental_discriminant(std::int64_t d) noexcept {
  if (d == 0 || d == 1) return false;
  const std::int64_t r = arith::mod(d, 4);
  const auto abs_d = static_cast<std::uint64_t>(d < 0 ? -d : d);
  if (r == 1) return squarefree(abs_d);
  if (r != 0) return false;
  const std::int64_t rm = arith::mod(d / 4, 4);
  return (rm == 2 || rm == 3) && squarefree(abs_d / 4);
}

QuadraticCharacter::QuadraticCharacter(std::int64_t discriminant)
    : d(discriminant),
      conductor(static_cast<std::uint64_t>(discriminant < 0 ? -discriminant
                                                            : discriminant)),
      parity_class(discriminant < 0 ? -1 : 1) {
  if (!is_fundamental_discriminant(discriminant)) {
    throw DomainError(std::to_string(discriminant) +
                      " is not a fundamental discriminant");
  }
}

std::vector<QuadraticCharacter> enumerate_quadratic(double X, Interval support) {
  if (!(X >= 3.0)) throw DomainError("quadratic enumeration needs X >= 3");
  if (!(support.lo < support.hi)) throw DomainError("empty support");
  const double lo = std::max(1.0, std::ceil(X * support.lo));
  const double hi = std::floor(X * support.hi);
  if (hi > 4e18) throw SizeError("discriminant range too large");
  std::vector<QuadraticCharacter> out;
  if (hi < lo) return out;

  const auto first = static_cast<std::uint64_t>(lo);
  const auto last = static_cast<std::uint64_t>(hi);
  const auto sqfree = squarefree_table(last);
  for (std::uint64_t n = first; n <= last; ++n) {
    if (!support.contains(static_cast<double>(n) / X)) continue;
    const auto d = static_cast<std::int64_t>(n);
    if (fundamental_with(-d, sqfree)) out.emplace_back(-d);
    if (fundamental_with(d, sqfree)) out.emplace_back(d);
  }
  return out;
}

std::vector<frame::FamilyRecord> quadratic_records(
    std::span<const QuadraticCharacter> characters, int parity_class) {
  if (parity_class < -1 || parity_class > 1) {
    throw DomainError("parity class must be +1, -1 or 0");
  }
  std::vector<frame::FamilyRecord> records;
  for (const auto& chi : characters) {
    if (parity_class != 0 && chi.parity_class != parity_class) continue;
    frame::FamilyRecord r;
    r.label = std::to_string(chi.d);
    r.conductor = static_cast<double>(chi.conductor);
    r.root_number = 1;
    const std::int64_t d = chi.d;
    r.lambda = [d](std::uint64_t p) {
      return static_cast<double>(arith::kronecker(d, static_cast<std::int64_t>(p)));
    };
    records.push_back(std::move(r));
  }
  return records;
}

frame::MurmurationSeries quadratic_murmuration(
    double X, const WeightFunction& phi, int parity_class,
    std::span<const std::uint64_t> primes, frame::Normalization normalization,
    unsigned workers) {
  if (parity_class < -1 || parity_class > 1) {
    throw DomainError("parity class must be +1, -1 or 0");
  }
  for (std::uint64_t p : primes) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  }
  const auto characters = enumerate_quadratic(X, phi.support());
  const auto records = quadratic_records(characters, parity_class);

  std::vector<std::int64_t> discriminants;
  discriminants.reserve(records.size());
  for (const auto& chi : characters) {
    if (parity_class == 0 || chi.parity_class == parity_class) {
      discriminants.push_back(chi.d);
    }
  }

  // (d | p) for odd p depends only on d mod p.
  const frame::ColumnFn columns = [&](std::uint64_t p,
                                      std::span<const std::size_t> members,
                                      std::span<double> out) {
    if (p == 2) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        out[i] = arith::kronecker(discriminants[members[i]], 2);
      }
      return;
    }
    std::vector<signed char> legendre(p, -1);
    legendre[0] = 0;
    std::uint64_t square = 0;
    for (std::uint64_t i = 1; i <= (p - 1) / 2; ++i) {
      square += 2 * i - 1;  // i^2 = (i-1)^2 + 2i - 1
      if (square >= p) square %= p;
      legendre[square] = 1;
    }
    const auto modulus = static_cast<std::int64_t>(p);
    for (std::size_t i = 0; i < members.size(); ++i) {
      out[i] = legendre[arith::mod(discriminants[members[i]], modulus)];
    }
  };
  return frame::murmuration_series(records, X, phi, primes, normalization,
                                   columns, workers);
}

}  // namespace murmur::families
