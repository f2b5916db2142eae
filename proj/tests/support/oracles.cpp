#include "oracles.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <numbers>

namespace oracle {

using big = boost::multiprecision::cpp_bin_float_100;

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::uint64_t prime_count(std::uint64_t limit) {
  std::uint64_t count = 0;
  for (std::uint64_t n = 2; n <= limit; ++n) count += is_prime(n);
  return count;
}

namespace {

// (prime, exponent) pairs by trial division.
std::vector<std::pair<std::uint64_t, int>> factor(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

long long gcd(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b) {
    const long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

int mobius(std::uint64_t n) {
  int mu = 1;
  for (const auto& [p, e] : factor(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t a = 1; a <= n; ++a) count += gcd(a, n) == 1;
  return count;
}

std::uint64_t divisor_sigma(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d == 0) s += d;
  }
  return s;
}

std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t d = 1; d <= n; ++d) s += n % d == 0;
  return s;
}

bool is_squarefree(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % (d * d) == 0) return false;
  }
  return n > 0;
}

std::vector<long long> ramanujan_tau(int n_max) {
  // Coefficients of prod_{n >= 1} (1 - q^n)^24 up to q^(n_max - 1).
  std::vector<long long> c(n_max, 0);
  c[0] = 1;
  for (int n = 1; n < n_max; ++n) {
    for (int rep = 0; rep < 24; ++rep) {
      for (int i = n_max - 1; i >= n; --i) c[i] -= c[i - n];
    }
  }
  std::vector<long long> tau(n_max + 1, 0);
  for (int i = 1; i <= n_max; ++i) tau[i] = c[i - 1];
  return tau;
}

long double kloosterman(long long m, long long n, long long c) {
  if (c == 1) return 1.0L;
  long double s = 0.0L;
  for (long long a = 1; a < c; ++a) {
    if (gcd(a, c) != 1) continue;
    long long inv = 1;
    while ((a * inv) % c != 1) ++inv;
    long long e = (((m % c) * a + (n % c) * inv) % c + c) % c;
    s += std::cos(2.0L * std::numbers::pi_v<long double> * e / c);
  }
  return s;
}

double bessel_j(int nu, double x) {
  const big half = big(x) / 2;
  const big half_sq = half * half;
  big term = boost::multiprecision::pow(half, nu) / boost::multiprecision::tgamma(big(nu + 1));
  big sum = term;
  for (int m = 1; m < 2000; ++m) {
    term *= -half_sq / (big(m) * big(m + nu));
    sum += term;
    if (m > half && abs(term) < abs(sum) * big("1e-60")) break;
  }
  return static_cast<double>(sum);
}

namespace {

int legendre(long long a, long long p) {
  a %= p;
  if (a < 0) a += p;
  if (a == 0) return 0;
  for (long long r = 1; r < p; ++r) {
    if ((r * r) % p == a) return 1;
  }
  return -1;
}

}  // namespace

int kronecker(long long a, long long n) {
  if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (a < 0) result = -result;
  }
  for (const auto& [p, e] : factor(static_cast<std::uint64_t>(n))) {
    int symbol;
    if (p == 2) {
      const long long r = ((a % 8) + 8) % 8;
      symbol = (r % 2 == 0) ? 0 : ((r == 1 || r == 7) ? 1 : -1);
    } else {
      symbol = legendre(a, static_cast<long long>(p));
    }
    for (int i = 0; i < e; ++i) result *= symbol;
  }
  return result;
}

bool is_fundamental(long long d) {
  if (d == 0 || d == 1) return false;
  const long long r = ((d % 4) + 4) % 4;
  const auto abs_d = static_cast<std::uint64_t>(d < 0 ? -d : d);
  if (r == 1) return is_squarefree(abs_d);
  if (r != 0) return false;
  const long long m = d / 4;
  const long long rm = ((m % 4) + 4) % 4;
  return (rm == 2 || rm == 3) && is_squarefree(abs_d / 4);
}

}  // namespace oracle
