#pragma once

#include <cstdint>

namespace murmur::special {

inline constexpr int kMaxBesselOrder = 500;
inline constexpr double kMaxBesselArgument = 1e5;

/// Which evaluation scheme bessel_j uses for a given (order, x). Exposed so
/// tests can probe continuity across the switch points.
enum class BesselRegime {
  power_series,      // x < max(8, order / 4)
  miller,            // backward recurrence, normalized by J0 + 2 sum J_2k = 1
  hankel_forward,    // x > max(30, 2 order): Hankel J0, J1 then upward recurrence
};

BesselRegime bessel_regime(int order, double x) noexcept;

/// Bessel function of the first kind J_order(x) for 0 <= order <= 500 and
/// 0 <= x <= 1e5. Throws DomainError outside that range.
double bessel_j(int order, double x);

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// ln of Gamma(k-1) / (4 pi sqrt(m n))^(k-1); finite for every even k >= 4.
double log_petersson_prefactor(int k, std::uint64_t m, std::uint64_t n);

/// Gamma(k-1) / (4 pi sqrt(m n))^(k-1), assembled in log space. Throws
/// DomainError for odd k or k < 4, and when the result is not representable
/// as a finite positive double (use the log form instead).
double petersson_prefactor(int k, std::uint64_t m, std::uint64_t n);

}  // namespace murmur::special
