#include <gtest/gtest.h>

#include <atomic>
#include <numbers>
#include <cmath>
#include <stdexcept>

#include "murmur/error.hpp"
#include "murmur/parallel.hpp"
#include "murmur/quadrature.hpp"
#include "murmur/summation.hpp"
#include "murmur/weight.hpp"
#include "oracles.hpp"

using murmur::Interval;

TEST(Weight, BumpShapeAndSupport) {
  const auto phi = murmur::bump(1.0, 2.0);
  EXPECT_DOUBLE_EQ(phi(1.5), 1.0);
  EXPECT_EQ(phi(1.0), 0.0);
  EXPECT_EQ(phi(2.0), 0.0);
  EXPECT_EQ(phi(0.5), 0.0);
  EXPECT_EQ(phi(7.0), 0.0);
  EXPECT_DOUBLE_EQ(phi(1.25), phi(1.75));
  EXPECT_NEAR(phi(1.25), std::exp(1.0 - 1.0 / 0.75), 1e-15);
  EXPECT_TRUE(phi.is_smooth());
}

TEST(Weight, IndicatorIsClosed) {
  const auto phi = murmur::indicator(1.0, 2.0);
  EXPECT_EQ(phi(1.0), 1.0);
  EXPECT_EQ(phi(2.0), 1.0);
  EXPECT_EQ(phi(2.0000001), 0.0);
  EXPECT_FALSE(phi.is_smooth());
}

TEST(Weight, Validation) {
  EXPECT_THROW(murmur::bump(2.0, 1.0), murmur::DomainError);
  EXPECT_THROW(murmur::bump(-1.0, 1.0), murmur::DomainError);
  EXPECT_THROW(murmur::indicator(0.0, 1.0), murmur::DomainError);
  EXPECT_NO_THROW(murmur::custom_weight({-1.0, 1.0}, [](double x) { return x; }, 1.0));
  EXPECT_THROW(murmur::custom_weight({1.0, 1.0}, [](double) { return 1.0; }, 1.0),
               murmur::DomainError);
}

TEST(Weight, Scaled) {
  const auto phi = murmur::bump(1.0, 3.0).scaled(2.5);
  EXPECT_DOUBLE_EQ(phi(2.0), 2.5);
  EXPECT_EQ(phi(4.0), 0.0);
}

TEST(Truncation, Policies) {
  EXPECT_THROW(murmur::TruncationPolicy::fixed(0), murmur::DomainError);
  EXPECT_THROW(murmur::TruncationPolicy::certified(0.0), murmur::DomainError);
  const auto p = murmur::TruncationPolicy::certified(1e-8, 10);
  EXPECT_EQ(p.mode, murmur::TruncationPolicy::Mode::tail_bound);
  EXPECT_EQ(p.cutoff, 10u);
}

TEST(Quadrature, PolynomialAndGaussian) {
  const auto cubic = murmur::quadrature([](double x) { return x * x * x - x; }, Interval{0.0, 2.0});
  EXPECT_NEAR(cubic.value, 2.0, 1e-12);
  const auto gauss = murmur::quadrature([](double x) { return std::exp(-x * x); },
                                        Interval{-8.0, 8.0});
  EXPECT_NEAR(gauss.value, std::sqrt(std::numbers::pi), 1e-10);
}

TEST(Quadrature, BumpAgainstSimpson) {
  const auto phi = murmur::bump(1.0, 2.0);
  const double want = oracle::simpson([&](double x) { return phi(x); }, 1.0, 2.0, 200000);
  EXPECT_NEAR(murmur::quadrature([&](double x) { return phi(x); }, Interval{1.0, 2.0}).value,
              want, 1e-10);
}

TEST(Quadrature, BreakpointsHandleJumps) {
  const double breaks[] = {-2.0, -1.0, 1.0, 2.0};
  const auto r = murmur::quadrature([](double x) { return std::abs(x) <= 1.0 ? 1.0 : 0.25; },
                                    breaks);
  EXPECT_NEAR(r.value, 2.5, 1e-12);
}

TEST(Quadrature, BudgetExhaustionCarriesEstimate) {
  murmur::QuadratureOptions opts;
  opts.abs_tolerance = 1e-15;
  opts.max_intervals = 3;
  try {
    murmur::quadrature([](double x) { return std::sin(200.0 * x); }, Interval{0.0, 10.0}, opts);
    FAIL() << "expected AccuracyError";
  } catch (const murmur::AccuracyError& e) {
    EXPECT_TRUE(std::isfinite(e.best_estimate()));
    EXPECT_GT(e.error_estimate(), 1e-15);
  }
}

TEST(CompensatedSum, RecoversCancelledTerms) {
  murmur::CompensatedSum s;
  s.add(1.0);
  s.add(1e100);
  s.add(1.0);
  s.add(-1e100);
  EXPECT_EQ(s.value(), 2.0);
}

TEST(Parallel, MapIsIndexStable) {
  for (unsigned w : {1u, 2u, 4u, 9u}) {
    const auto v = murmur::parallel_map(1000, w, [](std::size_t i) { return i * i; });
    for (std::size_t i = 0; i < v.size(); ++i) ASSERT_EQ(v[i], i * i);
  }
}

TEST(Parallel, RethrowsLowestIndexError) {
  try {
    murmur::parallel_for(100, 4, [](std::size_t i) {
      if (i == 17 || i == 60) throw std::runtime_error(std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "17");
  }
}
