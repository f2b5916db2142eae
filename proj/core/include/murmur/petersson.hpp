#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "murmur/arith.hpp"
#include "murmur/frame.hpp"
#include "murmur/weight.hpp"

namespace murmur::petersson {

/// Right-hand side query of the Petersson formula for level 1, weight k.
struct PeterssonQuery {
  int k = 12;
  std::uint64_t m = 1;
  std::uint64_t n = 1;
  TruncationPolicy policy = TruncationPolicy::certified(1e-12, 100'000);
};

/// Throws DomainError unless k is even with 4 <= k <= 501 and m, n >= 1.
void validate(const PeterssonQuery& query);

/// i^k for even k: +1 when k = 0 mod 4, -1 when k = 2 mod 4. This is also
/// the root number of every level-1 eigenform of weight k.
int weight_sign(int k);

/// Conductor proxy N(k) = ((k - 1) / (4 pi))^2 for weight-k forms.
double conductor_proxy(double k);

/// ln of a proven upper bound for
///   2 pi sum_{c > C} |S(m, n; c)| / c |J_{k-1}(4 pi sqrt(mn) / c)|
/// using |S| <= tau(c) sqrt(gcd(m, n)) sqrt(c), tau(c) <= 2 sqrt(c) and
/// |J_v(x)| <= (x/2)^v / v!.
double log_tail_bound(int k, std::uint64_t m, std::uint64_t n,
                      std::uint64_t cutoff);

/// delta_{m=n} + 2 pi i^k sum_{c=1}^{C} S(m, n; c)/c J_{k-1}(4 pi sqrt(mn)/c).
/// In tail_bound mode C is the least cutoff whose certified tail is below
/// policy.tail_tolerance (AccuracyError if that exceeds policy.cutoff); in
/// fixed_cutoff mode C = policy.cutoff. `tail_bound` is always the proven
/// bound for the omitted terms.
TruncatedValue petersson_delta(const PeterssonQuery& query,
                               const arith::ArithTables& tables,
                               unsigned workers = 1);

/// Inclusive range of weights to aggregate.
struct WeightWindow {
  int k_min = 4;
  int k_max = 4;
};

/// Result of a harmonic-weight average over a weight window.
struct HarmonicAverage {
  double value = 0.0;
  double numerator = 0.0;
  double denominator = 0.0;
  double scale = 0.0;          // X = N(K)
  int weights_used = 0;
  double max_tail_bound = 0.0; // worst certified tail over all queries
  std::string constants;       // symbolic normalization bookkeeping
};

/// sum_k Phi(N(k)/X) sqrt(p) Delta_k(1, p) / sum_k Phi(N(k)/X) Delta_k(1, 1)
/// over weights k in the window with i^k = sign (every even k for sign 0),
/// X = N(K). Delta_k is petersson_delta. Throws WindowError when no weight of that class has
/// nonzero weight.
HarmonicAverage harmonic_murmuration(double K, WeightWindow window,
                                     std::uint64_t p, const WeightFunction& phi,
                                     int sign, const arith::ArithTables& tables,
                                     TruncationPolicy policy = {});

/// Symmetric-square variant: n = p^2, every even weight in the window, and
/// the analytic coefficient lambda_f(p^2) (no sqrt(p) factor).
HarmonicAverage symsq_murmuration(double K, WeightWindow window,
                                  std::uint64_t p, const WeightFunction& phi,
                                  const arith::ArithTables& tables,
                                  TruncationPolicy policy = {});

/// harmonic_murmuration at each prime, y = p / N(K), parallel over primes.
frame::MurmurationSeries harmonic_series(double K, WeightWindow window,
                                         std::span<const std::uint64_t> primes,
                                         const WeightFunction& phi, int sign,
                                         const arith::ArithTables& tables,
                                         TruncationPolicy policy = {},
                                         unsigned workers = 1);

frame::MurmurationSeries symsq_series(double K, WeightWindow window,
                                      std::span<const std::uint64_t> primes,
                                      const WeightFunction& phi,
                                      const arith::ArithTables& tables,
                                      TruncationPolicy policy = {},
                                      unsigned workers = 1);

}  // namespace murmur::petersson
