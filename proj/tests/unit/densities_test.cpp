#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <set>

#include "murmur/densities.hpp"
#include "murmur/error.hpp"
#include "oracles.hpp"

namespace ds = murmur::densities;

namespace {

const murmur::arith::ArithTables& tables() {
  static const murmur::arith::ArithTables t(20000);
  return t;
}

constexpr double kSixteenPiSq = 16.0 * std::numbers::pi * std::numbers::pi;

}  // namespace

TEST(IlsDensity, AdmissibleModuliMatchScan) {
  const auto phi = murmur::bump(1.0, 2.0);
  for (double y : {1e-4, 0.0063, 0.5, 3.0, 47.5, 200.0}) {
    std::vector<std::uint64_t> scan;
    for (std::uint64_t c = 1; c <= 10000; ++c) {
      const double arg = kSixteenPiSq * y / (static_cast<double>(c) * c);
      if (arg >= 1.0 && arg <= 2.0) scan.push_back(c);
    }
    EXPECT_EQ(ds::ils_admissible_moduli(y, phi), scan) << y;
  }
}

TEST(IlsDensity, BelowSupportIsZero) {
  const auto phi = murmur::bump(1.0, 2.0);
  EXPECT_EQ(ds::ils_density(0.5 / kSixteenPiSq, phi, 1, tables()), 0.0);
}

TEST(IlsDensity, SingleModulusRegion) {
  // Only c = 1 contributes at 16 pi^2 y = 1.5.
  const auto phi = murmur::bump(1.0, 2.0);
  EXPECT_NEAR(ds::ils_density(1.5 / kSixteenPiSq, phi, 1, tables()), 4.0 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(ds::ils_density(1.5 / kSixteenPiSq, phi, -1, tables()), -4.0 * std::numbers::pi, 1e-12);
}

TEST(IlsDensity, MatchesDirectSum) {
  const auto phi = murmur::bump(1.0, 2.0);
  for (double y : {0.03, 0.4, 2.5}) {
    double want = 0.0;
    for (std::uint64_t c = 1; c <= 5000; ++c) {
      if (!oracle::is_squarefree(c)) continue;
      want += phi(kSixteenPiSq * y / (double(c) * c)) / (double(c) * c * oracle::euler_phi(c));
    }
    EXPECT_NEAR(ds::ils_density(y, phi, 1, tables()), 4.0 * std::numbers::pi * want, 1e-12) << y;
  }
}

TEST(NuDensity, AtomsAndMassesMatchEnumeration) {
  const murmur::Interval E{0.5, 5.0};
  const auto nu = ds::nu_density(E, 60, 1.0, tables());
  std::size_t expected = 0;
  for (std::uint64_t q = 1; q <= 60; ++q) {
    if (!oracle::is_squarefree(q)) continue;
    for (std::uint64_t a = 1; a <= 200; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const double loc = double(q) * q / (double(a) * a);
      if (loc < E.lo || loc > E.hi) continue;
      ++expected;
      const double phi = oracle::euler_phi(q);
      double mass = std::pow(double(q) / a, 3) / (phi * phi * oracle::divisor_sigma(q));
      if (loc == E.lo || loc == E.hi) mass /= 2;
      bool found = false;
      for (const auto& atom : nu.distribution.atoms()) {
        if (std::abs(atom.location - loc) < 1e-12) {
          EXPECT_NEAR(atom.mass, mass, 1e-15 * std::max(1.0, mass));
          found = true;
        }
      }
      EXPECT_TRUE(found) << q << "/" << a;
    }
  }
  EXPECT_EQ(nu.distribution.atoms().size(), expected);
  EXPECT_EQ(nu.pairs, expected);
}

TEST(NuDensity, EndpointAtomsAreHalved) {
  const auto closed = ds::nu_density({4.0, 5.0}, 100, 1.0, tables());
  const auto open = ds::nu_density({3.9, 5.0}, 100, 1.0, tables());
  const auto at4 = [](const ds::NuDensity& n) {
    for (const auto& a : n.distribution.atoms()) {
      if (a.location == 4.0) return a.mass;
    }
    return std::nan("");
  };
  EXPECT_NEAR(at4(closed), 0.5 * at4(open), 1e-15);
  EXPECT_NEAR(at4(open), 8.0 / 3.0, 1e-15);  // q = 2, a = 1
}

TEST(NuDensity, TailBoundCoversDoubling) {
  const murmur::Interval E{0.5, 20.0};
  const auto small = ds::nu_density(E, 200, 1.0, tables());
  const auto big = ds::nu_density(E, 400, 1.0, tables());
  const double gap = big.distribution.total_atom_mass() - small.distribution.total_atom_mass();
  EXPECT_GE(gap, 0.0);
  EXPECT_LE(gap, small.tail_bound);
  EXPECT_LT(big.tail_bound, small.tail_bound);
}

TEST(NuDensity, Errors) {
  EXPECT_THROW(ds::nu_density({0.0, 1.0}, 10, 1.0, tables()), murmur::DomainError);
  EXPECT_THROW(ds::nu_density({1.0, 2.0}, 0, 1.0, tables()), murmur::DomainError);
  EXPECT_THROW(ds::nu_density({1.0, 2.0}, 10, 1.0, tables(), 1e-9), murmur::AccuracyError);
}

TEST(Kernels, PointValues) {
  EXPECT_EQ(ds::w_so(ds::Parity::even, 0.0), 2.0);
  EXPECT_EQ(ds::w_so(ds::Parity::odd, 0.0), 0.0);
  EXPECT_NEAR(ds::w_so(ds::Parity::even, 0.5), 1.0, 1e-15);
  EXPECT_NEAR(ds::w_so(ds::Parity::odd, 0.25), 1.0 - 1.0 / (std::numbers::pi / 2.0), 1e-15);
  EXPECT_TRUE(ds::w_so_atoms(ds::Parity::even).empty());
  ASSERT_EQ(ds::w_so_atoms(ds::Parity::odd).size(), 1u);
  EXPECT_EQ(ds::w_so_hat(ds::Parity::odd, 0.3), 0.5);
  EXPECT_EQ(ds::w_so_hat(ds::Parity::odd, 1.3), 0.0);
  EXPECT_EQ(ds::w_so_hat(ds::Parity::even, 0.3), 0.5);
  EXPECT_EQ(ds::w_so_hat(ds::Parity::even, 1.3), 1.0);
}

TEST(Kernels, ContinuousTransformsSumToOne) {
  for (int i = 0; i <= 400; ++i) {
    const double y = -4.0 + 0.02 * i;
    EXPECT_EQ(ds::w_so_hat(ds::Parity::even, y) + ds::w_so_hat(ds::Parity::odd, y), 1.0);
  }
}

TEST(Kernels, DistributionKeepsAtomsSeparate) {
  const auto d = ds::w_so_hat_distribution(ds::Parity::odd);
  EXPECT_EQ(d.total_atom_mass(), 1.0);
  EXPECT_EQ(d.continuous(0.0), 0.5);
  EXPECT_THROW(ds::DistributionValue({{1.0, 1.0}, {1.0, 2.0}}, nullptr), murmur::DomainError);
}

TEST(OldPairing, ClosedFormInsideUnitInterval) {
  const auto f = [](double x) { return std::exp(-x * x) * (1.0 - x * x / 0.81); };
  const auto phi_hat = murmur::custom_weight({-0.9, 0.9}, f, 1.0);
  const double integral = oracle::simpson(f, -0.9, 0.9, 100000);
  for (auto parity : {ds::Parity::even, ds::Parity::odd}) {
    EXPECT_NEAR(ds::old_pairing(phi_hat, parity), f(0.0) + 0.5 * integral, 1e-9);
  }
}

TEST(OldPairing, SupportBeyondOne) {
  const auto f = [](double) { return 1.0; };
  const auto phi_hat = murmur::custom_weight({-1.5, 1.5}, f, 1.0);
  // odd: 1 + (1/2)*2 = 2; even: 1 + (1/2)*2 + 1*1 = 3.
  EXPECT_NEAR(ds::old_pairing(phi_hat, ds::Parity::odd), 2.0, 1e-12);
  EXPECT_NEAR(ds::old_pairing(phi_hat, ds::Parity::even), 3.0, 1e-12);
  const auto wide = murmur::custom_weight({-2.5, 2.5}, f, 1.0);
  EXPECT_THROW(ds::old_pairing(wide, ds::Parity::odd), murmur::DomainError);
}

TEST(ExplicitPrimeSum, SinglePrime) {
  const auto phi_hat = murmur::custom_weight({-1.5, 1.5}, [](double) { return 1.0; }, 1.0);
  const auto lambda = [](std::uint64_t) { return 1.0; };
  EXPECT_NEAR(ds::explicit_prime_sum(lambda, 2.0, phi_hat, tables()),
              std::log(2.0) / std::sqrt(2.0), 1e-15);
}

TEST(ExplicitPrimeSum, MissingPrimeIsNamed) {
  const auto phi_hat = murmur::custom_weight({-1.0, 1.0}, [](double) { return 1.0; }, 1.0);
  const auto lambda = [](std::uint64_t p) -> double {
    if (p == 7) throw murmur::CoverageError("E", 7);
    return 0.0;
  };
  try {
    ds::explicit_prime_sum(lambda, 20.0, phi_hat, tables());
    FAIL();
  } catch (const murmur::DataError& e) {
    EXPECT_NE(std::string(e.what()).find("7"), std::string::npos);
  }
}
