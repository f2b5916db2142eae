#pragma once

#include <cstdint>

#include "murmur/arith.hpp"

namespace murmur::arith {

/// Arguments of the Kloosterman sum S(m, n; c). m and n may be any integers;
/// they are reduced mod c before evaluation, which leaves S unchanged.
struct KloostermanParams {
  std::int64_t m;
  std::int64_t n;
  std::uint64_t c;
};

/// Largest imaginary part tolerated before a sum is declared non-real.
inline constexpr double kKloostermanImagTolerance = 1e-9;

/// Direct summation over the units d mod c of exp(2 pi i (m d + n/d) / c).
/// S(m, n; 1) = 1. The imaginary part is accumulated and checked against
/// kKloostermanImagTolerance before being discarded (AccuracyError if not).
double kloosterman_direct(const KloostermanParams& params);

/// Same value via the factorization of c: direct sums modulo each prime
/// power, combined with the twisted multiplicativity
///   S(m, n; q r) = S(m r', n r'; q) * S(m q', n q'; r),
/// where r' = r^{-1} mod q and q' = q^{-1} mod r. Needs c <= tables.limit().
double kloosterman_fast(const KloostermanParams& params,
                        const ArithTables& tables);

}  // namespace murmur::arith
