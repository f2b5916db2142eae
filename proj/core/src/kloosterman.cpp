#include "murmur/kloosterman.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "murmur/error.hpp"

namespace murmur::arith {

namespace {

// d -> d^{-1} walks through the units; the inverse is kept incrementally
// with the extended Euclid per unit. c stays below 2^32 so the products
// m*d and n*dinv fit in 64 bits once m, n are reduced.
struct ComplexSum {
  double re = 0.0;
  double im = 0.0;
};

ComplexSum kloosterman_complex(std::uint64_t m, std::uint64_t n,
                               std::uint64_t c) {
  ComplexSum sum;
  const double scale = 2.0 * std::numbers::pi / static_cast<double>(c);
  const auto cs = static_cast<std::int64_t>(c);
  for (std::uint64_t d = 1; d < c; ++d) {
    if (std::gcd(d, c) != 1) continue;
    const auto dinv = static_cast<std::uint64_t>(
        mod_inverse(static_cast<std::int64_t>(d), cs));
    const std::uint64_t phase = (m * d % c + n * dinv % c) % c;
    const double angle = scale * static_cast<double>(phase);
    sum.re += std::cos(angle);
    sum.im += std::sin(angle);
  }
  return sum;
}

double checked_real(const ComplexSum& s, std::uint64_t c) {
  if (std::abs(s.im) >= kKloostermanImagTolerance) {
    throw AccuracyError("Kloosterman sum modulo " + std::to_string(c) +
                            " has imaginary residue " + std::to_string(s.im),
                        s.re, std::abs(s.im));
  }
  return s.re;
}

double direct_reduced(std::uint64_t m, std::uint64_t n, std::uint64_t c) {
  if (c == 1) return 1.0;
  return checked_real(kloosterman_complex(m, n, c), c);
}

}  // namespace

double kloosterman_direct(const KloostermanParams& params) {
  if (params.c == 0) throw DomainError("Kloosterman modulus must be positive");
  if (params.c >= (std::uint64_t{1} << 31)) {
    throw SizeError("Kloosterman modulus too large for 64-bit phase products");
  }
  const auto cs = static_cast<std::int64_t>(params.c);
  return direct_reduced(static_cast<std::uint64_t>(mod(params.m, cs)),
                        static_cast<std::uint64_t>(mod(params.n, cs)),
                        params.c);
}

double kloosterman_fast(const KloostermanParams& params,
                        const ArithTables& tables) {
  if (params.c == 0) throw DomainError("Kloosterman modulus must be positive");
  if (params.c > tables.limit()) {
    throw DomainError("Kloosterman modulus " + std::to_string(params.c) +
                      " exceeds table limit " + std::to_string(tables.limit()));
  }
  if (params.c == 1) return 1.0;

  const auto c = static_cast<std::int64_t>(params.c);
  const std::int64_t m = mod(params.m, c);
  const std::int64_t n = mod(params.n, c);

  double product = 1.0;
  for (const auto& pp : tables.factor(params.c)) {
    const auto q = static_cast<std::int64_t>(pp.value());
    const std::int64_t r = c / q;
    // Twist by r^{-1} mod q on both arguments.
    const std::int64_t rinv = mod_inverse(r, q);
    const auto mq = static_cast<std::uint64_t>(mod(m % q * rinv, q));
    const auto nq = static_cast<std::uint64_t>(mod(n % q * rinv, q));
    product *= direct_reduced(mq, nq, static_cast<std::uint64_t>(q));
  }
  return product;
}

}  // namespace murmur::arith
