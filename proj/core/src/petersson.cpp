#include "murmur/petersson.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include "murmur/error.hpp"
#include "murmur/kloosterman.hpp"
#include "murmur/parallel.hpp"
#include "murmur/special.hpp"
#include "murmur/summation.hpp"

namespace murmur::petersson {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kFourPi = 4.0 * std::numbers::pi;

double kernel_argument(std::uint64_t m, std::uint64_t n) {
  return kFourPi * std::sqrt(static_cast<double>(m) * static_cast<double>(n));
}

double kloosterman(std::uint64_t m, std::uint64_t n, std::uint64_t c,
                   const arith::ArithTables& tables) {
  const arith::KloostermanParams params{static_cast<std::int64_t>(m),
                                        static_cast<std::int64_t>(n), c};
  if (c <= tables.limit()) return arith::kloosterman_fast(params, tables);
  return arith::kloosterman_direct(params);
}

// Least C >= 1 whose certified tail is <= tolerance.
std::uint64_t certified_cutoff(int k, std::uint64_t m, std::uint64_t n,
                               double tolerance, std::uint64_t budget) {
  const double nu = k - 1.0;
  const double at_one = log_tail_bound(k, m, n, 1);
  const double log_tol = std::log(tolerance);
  if (at_one <= log_tol) return 1;
  // bound(C) = bound(1) * C^{1 - nu}
  const double log_c = (at_one - log_tol) / (nu - 1.0);
  if (log_c > std::log(static_cast<double>(budget)) + 1.0) return budget + 1;
  auto cutoff = static_cast<std::uint64_t>(std::ceil(std::exp(log_c)));
  cutoff = std::max<std::uint64_t>(cutoff, 1);
  while (log_tail_bound(k, m, n, cutoff) > log_tol) ++cutoff;
  return cutoff;
}

}  // namespace

void validate(const PeterssonQuery& query) {
  if (query.k < 4 || query.k % 2 != 0 ||
      query.k - 1 > special::kMaxBesselOrder) {
    throw DomainError("Petersson weight must be even in [4, " +
                      std::to_string(special::kMaxBesselOrder + 1) + "], got " +
                      std::to_string(query.k));
  }
  if (query.m == 0 || query.n == 0) {
    throw DomainError("Petersson indices must be positive");
  }
  if (kernel_argument(query.m, query.n) > special::kMaxBesselArgument) {
    throw DomainError("Petersson kernel argument 4 pi sqrt(mn) exceeds the "
                      "supported Bessel range");
  }
}

int weight_sign(int k) {
  if (k % 2 != 0) throw DomainError("odd weight has no level-1 cusp forms");
  return (k % 4 == 0) ? 1 : -1;
}

double conductor_proxy(double k) {
  const double r = (k - 1.0) / kFourPi;
  return r * r;
}

double log_tail_bound(int k, std::uint64_t m, std::uint64_t n,
                      std::uint64_t cutoff) {
  const double nu = k - 1.0;
  const double x = kernel_argument(m, n);
  const double g = static_cast<double>(std::gcd(m, n));
  // 2 pi * 2 sqrt(g) * (x/2)^nu / nu! * C^{1-nu} / (nu - 1)
  return std::log(kTwoPi * 2.0 * std::sqrt(g)) + nu * std::log(0.5 * x) -
         std::lgamma(nu + 1.0) +
         (1.0 - nu) * std::log(static_cast<double>(cutoff)) - std::log(nu - 1.0);
}

TruncatedValue petersson_delta(const PeterssonQuery& query,
                               const arith::ArithTables& tables,
                               unsigned workers) {
  validate(query);
  const auto& policy = query.policy;

  std::uint64_t cutoff = policy.cutoff;
  if (policy.mode == TruncationPolicy::Mode::tail_bound) {
    cutoff = certified_cutoff(query.k, query.m, query.n, policy.tail_tolerance,
                              policy.cutoff);
    if (cutoff > policy.cutoff) {
      throw AccuracyError(
          "Petersson tail tolerance " + std::to_string(policy.tail_tolerance) +
              " needs more than " + std::to_string(policy.cutoff) + " terms",
          std::numeric_limits<double>::quiet_NaN(),
          std::exp(log_tail_bound(query.k, query.m, query.n, policy.cutoff)));
    }
  }

  const int order = query.k - 1;
  const double x = kernel_argument(query.m, query.n);
  auto terms = parallel_map(cutoff, workers, [&](std::size_t i) {
    const std::uint64_t c = i + 1;
    const double j = special::bessel_j(order, x / static_cast<double>(c));
    if (j == 0.0) return 0.0;
    return kloosterman(query.m, query.n, c, tables) / static_cast<double>(c) * j;
  });

  CompensatedSum sum;
  for (double t : terms) sum.add(t);

  TruncatedValue out;
  out.value = (query.m == query.n ? 1.0 : 0.0) +
              kTwoPi * weight_sign(query.k) * sum.value();
  out.tail_bound = std::exp(log_tail_bound(query.k, query.m, query.n, cutoff));
  out.terms = cutoff;
  return out;
}

namespace {

// Weights k of a window with nonzero Phi(N(k)/X), with their diagonal
// Delta_k(1,1) values.
struct WeightPlan {
  double scale = 0.0;
  std::vector<int> ks;
  std::vector<double> weights;
  std::vector<double> diagonal;
  double denominator = 0.0;
  double max_tail = 0.0;
};

enum class SignClass { plus, minus, all };

WeightPlan make_plan(double K, WeightWindow window, const WeightFunction& phi,
                     SignClass sign_class, const arith::ArithTables& tables,
                     const TruncationPolicy& policy) {
  if (!(K > 1.0)) throw DomainError("weight scale K must exceed 1");
  if (window.k_min > window.k_max) throw DomainError("empty weight window");

  WeightPlan plan;
  plan.scale = conductor_proxy(K);
  CompensatedSum den;
  for (int k = std::max(window.k_min, 4); k <= window.k_max; ++k) {
    if (k % 2 != 0) continue;
    if (sign_class == SignClass::plus && k % 4 != 0) continue;
    if (sign_class == SignClass::minus && k % 4 != 2) continue;
    const double w = phi(conductor_proxy(k) / plan.scale);
    if (w == 0.0) continue;
    const auto diag = petersson_delta({k, 1, 1, policy}, tables);
    plan.ks.push_back(k);
    plan.weights.push_back(w);
    plan.diagonal.push_back(diag.value);
    plan.max_tail = std::max(plan.max_tail, diag.tail_bound);
    den.add(w * diag.value);
  }
  if (plan.ks.empty()) {
    throw WindowError("no weight of the requested class in [" +
                      std::to_string(window.k_min) + ", " +
                      std::to_string(window.k_max) +
                      "] has nonzero weight at X=" + std::to_string(plan.scale));
  }
  plan.denominator = den.value();
  return plan;
}

HarmonicAverage evaluate(const WeightPlan& plan, std::uint64_t n,
                         double coefficient_scale,
                         const arith::ArithTables& tables,
                         const TruncationPolicy& policy) {
  CompensatedSum num;
  double max_tail = plan.max_tail;
  for (std::size_t i = 0; i < plan.ks.size(); ++i) {
    const auto off = petersson_delta({plan.ks[i], 1, n, policy}, tables);
    max_tail = std::max(max_tail, off.tail_bound);
    num.add(plan.weights[i] * coefficient_scale * off.value);
  }
  HarmonicAverage out;
  out.numerator = num.value();
  out.denominator = plan.denominator;
  out.value = out.numerator / out.denominator;
  out.scale = plan.scale;
  out.weights_used = static_cast<int>(plan.ks.size());
  out.max_tail_bound = max_tail;
  return out;
}

constexpr const char* kHarmonicConstants =
    "Delta_k(1,n) = Gamma(k-1)/(4 pi)^(k-1) * sum_f lambda_f(n)/||f||^2 for "
    "f normalized with a_f(1)=1; harmonic weight per form "
    "omega_f = Gamma(k-1)/((4 pi)^(k-1) ||f||^2) = c_k/L(1,Sym^2 f) with c_k "
    "proportional to 1/(k-1) (constant not folded in); value = sum_k "
    "Phi(N(k)/X) sqrt(p) Delta_k(1,p) / sum_k Phi(N(k)/X) Delta_k(1,1), "
    "N(k) = ((k-1)/(4 pi))^2, X = N(K)";

constexpr const char* kSymsqConstants =
    "value = sum_k Phi(N(k)/X) Delta_k(1,p^2) / sum_k Phi(N(k)/X) "
    "Delta_k(1,1) = harmonic average of lambda_f(p^2); all even k, "
    "N(k) = ((k-1)/(4 pi))^2, X = N(K); omega_f carries c_k ~ 1/(k-1) "
    "relative to 1/L(1,Sym^2 f) (not folded in)";

SignClass sign_class_of(int sign) {
  if (sign == 1) return SignClass::plus;
  if (sign == -1) return SignClass::minus;
  if (sign == 0) return SignClass::all;
  throw DomainError("sign class must be +1, -1 or 0");
}

std::uint64_t checked_square(std::uint64_t p) {
  if (p > (std::uint64_t{1} << 31)) throw DomainError("prime too large to square");
  return p * p;
}

}  // namespace

HarmonicAverage harmonic_murmuration(double K, WeightWindow window,
                                     std::uint64_t p, const WeightFunction& phi,
                                     int sign, const arith::ArithTables& tables,
                                     TruncationPolicy policy) {
  const auto plan =
      make_plan(K, window, phi, sign_class_of(sign), tables, policy);
  auto out = evaluate(plan, p, std::sqrt(static_cast<double>(p)), tables, policy);
  out.constants = kHarmonicConstants;
  return out;
}

HarmonicAverage symsq_murmuration(double K, WeightWindow window,
                                  std::uint64_t p, const WeightFunction& phi,
                                  const arith::ArithTables& tables,
                                  TruncationPolicy policy) {
  const auto plan = make_plan(K, window, phi, SignClass::all, tables, policy);
  auto out = evaluate(plan, checked_square(p), 1.0, tables, policy);
  out.constants = kSymsqConstants;
  return out;
}

namespace {

frame::MurmurationSeries series_over(const WeightPlan& plan,
                                     std::span<const std::uint64_t> primes,
                                     bool symmetric_square,
                                     const arith::ArithTables& tables,
                                     const TruncationPolicy& policy,
                                     unsigned workers) {
  if (primes.empty()) throw DomainError("series needs at least one prime");
  auto samples = parallel_map(primes.size(), workers, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    const auto avg =
        symmetric_square
            ? evaluate(plan, checked_square(p), 1.0, tables, policy)
            : evaluate(plan, p, std::sqrt(static_cast<double>(p)), tables, policy);
    frame::SeriesSample s;
    s.y = static_cast<double>(p) / plan.scale;
    s.value = avg.value;
    return s;
  });
  frame::MurmurationSeries series{
      std::move(samples), plan.scale,
      symmetric_square ? frame::Normalization::analytic
                       : frame::Normalization::raw_sqrtp};
  series.validate();
  return series;
}

}  // namespace

frame::MurmurationSeries harmonic_series(double K, WeightWindow window,
                                         std::span<const std::uint64_t> primes,
                                         const WeightFunction& phi, int sign,
                                         const arith::ArithTables& tables,
                                         TruncationPolicy policy,
                                         unsigned workers) {
  const auto plan =
      make_plan(K, window, phi, sign_class_of(sign), tables, policy);
  return series_over(plan, primes, false, tables, policy, workers);
}

frame::MurmurationSeries symsq_series(double K, WeightWindow window,
                                      std::span<const std::uint64_t> primes,
                                      const WeightFunction& phi,
                                      const arith::ArithTables& tables,
                                      TruncationPolicy policy,
                                      unsigned workers) {
  const auto plan = make_plan(K, window, phi, SignClass::all, tables, policy);
  return series_over(plan, primes, true, tables, policy, workers);
}

}  // namespace murmur::petersson
