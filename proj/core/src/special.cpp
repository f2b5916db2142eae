#include <cmath>
#include <numbers>
#include <string>

#include "murmur/error.hpp"
#include "murmur/special.hpp"

namespace murmur::special {

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
  return std::lgamma(x);
}

double log_petersson_prefactor(int k, std::uint64_t m, std::uint64_t n) {
  if (k < 4 || k % 2 != 0) {
    throw DomainError("Petersson weight must be even and at least 4, got " +
                      std::to_string(k));
  }
  if (m == 0 || n == 0) throw DomainError("Petersson indices must be positive");
  const double log_base =
      std::log(4.0 * std::numbers::pi) +
      0.5 * (std::log(static_cast<double>(m)) + std::log(static_cast<double>(n)));
  return log_gamma(k - 1.0) - (k - 1.0) * log_base;
}

double petersson_prefactor(int k, std::uint64_t m, std::uint64_t n) {
  const double log_value = log_petersson_prefactor(k, m, n);
  const double value = std::exp(log_value);
  if (!std::isfinite(value) || value == 0.0) {
    throw DomainError("Petersson prefactor for k=" + std::to_string(k) +
                      " is not representable (log value " +
                      std::to_string(log_value) + ")");
  }
  return value;
}

}  // namespace murmur::special
