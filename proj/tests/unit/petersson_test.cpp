#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "murmur/error.hpp"
#include "murmur/petersson.hpp"
#include "oracles.hpp"

namespace pt = murmur::petersson;

namespace {

const murmur::arith::ArithTables& tables() {
  static const murmur::arith::ArithTables t(100000);
  return t;
}

double delta(int k, std::uint64_t m, std::uint64_t n) {
  return pt::petersson_delta({k, m, n}, tables()).value;
}

}  // namespace

TEST(Petersson, DiagonalMatchesPeterssonNormOfDelta) {
  // Gamma(11) / (4 pi)^11 / <Delta, Delta>, <Delta, Delta> = 1.0353620568043209e-6.
  const double want = std::tgamma(11.0) / std::pow(4.0 * std::numbers::pi, 11.0) / 1.0353620568043209e-6;
  EXPECT_NEAR(delta(12, 1, 1), want, 1e-10 * want);
}

TEST(Petersson, HeckeRatiosAtWeightTwelve) {
  const auto tau = oracle::ramanujan_tau(60);
  const double d11 = delta(12, 1, 1);
  for (std::uint64_t n = 2; n <= 60; ++n) {
    const double want = static_cast<double>(tau[n]) / std::pow(static_cast<double>(n), 5.5);
    EXPECT_NEAR(delta(12, 1, n) / d11, want, 1e-9) << n;
  }
}

TEST(Petersson, OffDiagonalProducts) {
  // Delta(2,3) / Delta(1,1) = lambda(2) lambda(3).
  const auto tau = oracle::ramanujan_tau(6);
  const double want = tau[2] / std::pow(2.0, 5.5) * tau[3] / std::pow(3.0, 5.5);
  EXPECT_NEAR(delta(12, 2, 3) / delta(12, 1, 1), want, 1e-9);
  EXPECT_NEAR(delta(12, 2, 3), delta(12, 3, 2), 1e-12);
}

TEST(Petersson, VanishesWithoutCuspForms) {
  // Low weights converge slowly, so the tolerance is whatever 3000 terms certify.
  for (int k : {4, 6, 8, 10, 14}) {
    for (std::uint64_t n : {1u, 2u, 7u, 30u}) {
      const double tol = std::max(1e-12, 2.0 * std::exp(pt::log_tail_bound(k, 1, n, 3000)));
      const pt::PeterssonQuery q{k, 1, n, murmur::TruncationPolicy::certified(tol, 3000)};
      EXPECT_NEAR(pt::petersson_delta(q, tables()).value, 0.0, tol + 1e-10) << k << " " << n;
    }
  }
}

TEST(Petersson, CertifiedCutoffIsMinimal) {
  const pt::PeterssonQuery q{24, 1, 17, murmur::TruncationPolicy::certified(1e-10)};
  const auto r = pt::petersson_delta(q, tables());
  EXPECT_LE(r.tail_bound, 1e-10);
  EXPECT_LE(pt::log_tail_bound(24, 1, 17, r.terms), std::log(1e-10));
  if (r.terms > 1) {
    EXPECT_GT(pt::log_tail_bound(24, 1, 17, r.terms - 1), std::log(1e-10));
  }
}

TEST(Petersson, FixedCutoffAndBudget) {
  const auto fixed = pt::petersson_delta({12, 1, 2, murmur::TruncationPolicy::fixed(500)}, tables());
  EXPECT_EQ(fixed.terms, 500u);
  EXPECT_THROW(pt::petersson_delta({4, 1, 5000, murmur::TruncationPolicy::certified(1e-14, 10)},
                                   tables()),
               murmur::AccuracyError);
}

TEST(Petersson, WorkerCountDoesNotChangeResult) {
  const pt::PeterssonQuery q{30, 1, 101};
  EXPECT_EQ(pt::petersson_delta(q, tables(), 1).value, pt::petersson_delta(q, tables(), 4).value);
}

TEST(Petersson, Validation) {
  EXPECT_THROW(delta(13, 1, 1), murmur::DomainError);
  EXPECT_THROW(delta(2, 1, 1), murmur::DomainError);
  EXPECT_THROW(delta(600, 1, 1), murmur::DomainError);
  EXPECT_THROW(delta(12, 0, 1), murmur::DomainError);
  EXPECT_EQ(pt::weight_sign(12), 1);
  EXPECT_EQ(pt::weight_sign(14), -1);
  EXPECT_NEAR(pt::conductor_proxy(1.0 + 4.0 * std::numbers::pi), 1.0, 1e-15);
}

TEST(HarmonicAverage, SingleWeightReducesToEigenvalue) {
  const auto tau = oracle::ramanujan_tau(50);
  const auto phi = murmur::bump(0.5, 2.0);
  for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
    const auto h = pt::harmonic_murmuration(12.0, {12, 12}, p, phi, 1, tables());
    EXPECT_EQ(h.weights_used, 1);
    EXPECT_NEAR(h.value, std::sqrt(p) * tau[p] / std::pow(p, 5.5), 1e-9);
    const auto s = pt::symsq_murmuration(12.0, {12, 12}, p, phi, tables());
    EXPECT_NEAR(s.value, tau[p * p] / std::pow(p, 11.0), 1e-9);
  }
  EXPECT_THROW(pt::harmonic_murmuration(12.0, {12, 12}, 2, phi, -1, tables()),
               murmur::WindowError);
}

TEST(HarmonicAverage, SignClassesHaveOppositeSigns) {
  const auto phi = murmur::bump(1.0, 2.0);
  const double K = 60.0;
  const double X = pt::conductor_proxy(K);
  const auto p = static_cast<std::uint64_t>(1.5 * X);
  std::uint64_t prime = p;
  while (!oracle::is_prime(prime)) ++prime;
  const auto plus = pt::harmonic_murmuration(K, {4, 200}, prime, phi, 1, tables());
  const auto minus = pt::harmonic_murmuration(K, {4, 200}, prime, phi, -1, tables());
  EXPECT_GT(plus.value, 0.0);
  EXPECT_LT(minus.value, 0.0);
  EXPECT_LT(plus.max_tail_bound, 1e-11);
}

TEST(HarmonicAverage, SeriesIsDeterministicAcrossWorkers) {
  const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23};
  const auto phi = murmur::bump(1.0, 2.0);
  const auto a = pt::harmonic_series(40, {4, 100}, primes, phi, 1, tables(), {}, 1);
  const auto b = pt::harmonic_series(40, {4, 100}, primes, phi, 1, tables(), {}, 3);
  ASSERT_EQ(a.samples.size(), b.samples.size());
  for (std::size_t i = 0; i < a.samples.size(); ++i) {
    EXPECT_EQ(a.samples[i].value, b.samples[i].value);
  }
}
