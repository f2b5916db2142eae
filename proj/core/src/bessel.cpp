#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "murmur/error.hpp"
#include "murmur/special.hpp"
#include "murmur/special_detail.hpp"

namespace murmur::special {

namespace detail {

double bessel_series(int order, double x) {
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  const double half = 0.5 * x;
  // Leading term (x/2)^order / order! in log space to dodge overflow.
  const double log_lead =
      order * std::log(half) - std::lgamma(static_cast<double>(order) + 1.0);
  const double lead = std::exp(log_lead);
  if (lead == 0.0) return 0.0;

  const double q = half * half;
  double term = 1.0;
  double sum = 1.0;
  for (int m = 1; m < 10000; ++m) {
    term *= -q / (static_cast<double>(m) * (m + order));
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return lead * sum;
}

double bessel_miller(int order, double x) {
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  constexpr double kBig = 1e250;
  constexpr double kSmall = 1e-250;

  const double top = std::max(static_cast<double>(order), x);
  int start = static_cast<int>(top + 2.0 * std::sqrt(40.0 * top) + 30.0);
  if (start % 2 == 1) ++start;

  const double two_over_x = 2.0 / x;
  double upper = 0.0;   // J_{n+1}
  double current = 1e-30;  // J_n, arbitrary seed at n = start
  double norm = 0.0;    // J_0 + 2 sum_{k>=1} J_{2k}
  double stored = 0.0;
  int rescales_after_store = 0;
  bool have_stored = false;

  for (int n = start; n > 0; --n) {
    const double lower = n * two_over_x * current - upper;  // J_{n-1}
    upper = current;
    current = lower;
    if (std::abs(current) > kBig) {
      current *= kSmall;
      upper *= kSmall;
      norm *= kSmall;
      if (have_stored) ++rescales_after_store;
    }
    const int index = n - 1;
    if (index == order) {
      stored = current;
      have_stored = true;
    }
    if (index > 0 && index % 2 == 0) norm += 2.0 * current;
  }
  norm += current;  // J_0

  if (stored == 0.0) return 0.0;
  const double log_mag = std::log(std::abs(stored)) +
                         rescales_after_store * std::log(kSmall) -
                         std::log(std::abs(norm));
  const double sign = ((stored < 0) != (norm < 0)) ? -1.0 : 1.0;
  return sign * std::exp(log_mag);
}

namespace {

// Hankel asymptotic expansion for J_mu(x), mu in {0, 1}, x >= 30.
double hankel_j(int mu, double x) {
  const double four_mu2 = 4.0 * mu * mu;
  double p = 1.0, q = 0.0;
  double term = 1.0;
  double previous = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    term *= (four_mu2 - odd * odd) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > previous) break;  // asymptotic series started diverging
    previous = mag;
    // Terms alternate between Q (odd k) and P (even k) with sign (-1)^{floor(k/2)}.
    const double signed_term = ((k / 2) % 2 == 0) ? term : -term;
    if (k % 2 == 1) {
      q += signed_term;
    } else {
      p += signed_term;
    }
    if (mag < 1e-17) break;
  }
  const double c = std::cos(x);
  const double s = std::sin(x);
  const double r2 = std::numbers::sqrt2 / 2.0;
  // chi = x - (mu/2 + 1/4) pi, expanded to avoid rounding x - pi/4.
  double cos_chi, sin_chi;
  if (mu == 0) {
    cos_chi = r2 * (c + s);
    sin_chi = r2 * (s - c);
  } else {
    cos_chi = r2 * (s - c);
    sin_chi = -r2 * (s + c);
  }
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * cos_chi - q * sin_chi);
}

}  // namespace

double bessel_hankel_forward(int order, double x) {
  const double j0 = hankel_j(0, x);
  if (order == 0) return j0;
  double prev = j0;
  double current = hankel_j(1, x);
  const double two_over_x = 2.0 / x;
  for (int n = 1; n < order; ++n) {
    const double next = n * two_over_x * current - prev;
    prev = current;
    current = next;
  }
  return current;
}

}  // namespace detail

BesselRegime bessel_regime(int order, double x) noexcept {
  if (x < std::max(8.0, order / 4.0)) return BesselRegime::power_series;
  if (x > std::max(30.0, 2.0 * order)) return BesselRegime::hankel_forward;
  return BesselRegime::miller;
}

double bessel_j(int order, double x) {
  if (order < 0 || order > kMaxBesselOrder || !(x >= 0.0) ||
      x > kMaxBesselArgument) {
    throw DomainError("bessel_j(" + std::to_string(order) + ", " +
                      std::to_string(x) + ") outside supported range");
  }
  switch (bessel_regime(order, x)) {
    case BesselRegime::power_series: return detail::bessel_series(order, x);
    case BesselRegime::miller: return detail::bessel_miller(order, x);
    case BesselRegime::hankel_forward:
      return detail::bessel_hankel_forward(order, x);
  }
  return 0.0;
}

}  // namespace murmur::special
