#include "murmur/densities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "murmur/error.hpp"
#include "murmur/summation.hpp"

namespace murmur::densities {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSixteenPiSq = 16.0 * kPi * kPi;

// prod_p (1 + 1/(p(p-1))) = zeta(2) zeta(3) / zeta(6)
constexpr double kLandauTotientConstant = 1.9435964368207592;

double sinc_2pi(double x) {
  if (x == 0.0) return 1.0;
  const double t = 2.0 * kPi * x;
  return std::sin(t) / t;
}

double unit_indicator(double y) { return (y >= -1.0 && y <= 1.0) ? 1.0 : 0.0; }

}  // namespace

DistributionValue::DistributionValue(std::vector<Atom> atoms,
                                     std::function<double(double)> continuous)
    : atoms_(std::move(atoms)), continuous_(std::move(continuous)) {
  std::sort(atoms_.begin(), atoms_.end(),
            [](const Atom& a, const Atom& b) { return a.location < b.location; });
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!std::isfinite(atoms_[i].mass) || !std::isfinite(atoms_[i].location)) {
      throw DomainError("atom with non-finite location or mass");
    }
    if (i > 0 && atoms_[i].location == atoms_[i - 1].location) {
      throw DomainError("duplicate atom location " +
                        std::to_string(atoms_[i].location));
    }
  }
  if (!continuous_) continuous_ = [](double) { return 0.0; };
}

double DistributionValue::total_atom_mass() const {
  CompensatedSum s;
  for (const auto& a : atoms_) s.add(a.mass);
  return s.value();
}

std::vector<std::uint64_t> ils_admissible_moduli(double y,
                                                 const WeightFunction& phi) {
  if (!(y > 0.0)) throw DomainError("ils density needs y > 0");
  const auto& s = phi.support();
  if (!(s.lo > 0.0)) throw DomainError("ils density needs supp(Phi) in (0, inf)");
  const double lo = 4.0 * kPi * std::sqrt(y / s.hi);
  const double hi = 4.0 * kPi * std::sqrt(y / s.lo);
  std::vector<std::uint64_t> out;
  // One extra modulus on each side absorbs rounding in the square roots; the
  // membership test below is what decides.
  const auto first = static_cast<std::uint64_t>(std::max(1.0, std::floor(lo)));
  const auto last = static_cast<std::uint64_t>(std::floor(hi)) + 1;
  for (std::uint64_t c = first; c <= last; ++c) {
    const double arg = kSixteenPiSq * y / (static_cast<double>(c) * c);
    if (s.contains(arg)) out.push_back(c);
  }
  return out;
}

double ils_density(double y, const WeightFunction& phi, int sign,
                   const arith::ArithTables& tables) {
  if (sign != 1 && sign != -1) throw DomainError("sign must be +1 or -1");
  CompensatedSum sum;
  for (std::uint64_t c : ils_admissible_moduli(y, phi)) {
    if (c > tables.limit()) {
      throw DomainError("ils density needs moduli up to " + std::to_string(c) +
                        " beyond table limit");
    }
    if (tables.mobius(c) == 0) continue;
    const double cd = static_cast<double>(c);
    const double arg = kSixteenPiSq * y / (cd * cd);
    sum.add(phi(arg) / (cd * cd * static_cast<double>(tables.euler_phi(c))));
  }
  return sign * 4.0 * kPi * sum.value();
}

double nu_tail_bound(Interval E, std::uint64_t q_max, double prefactor) {
  if (q_max == 0) throw DomainError("q_max must be at least 1");
  const double q = static_cast<double>(q_max);
  // mass(q) <= (hi^{3/2} + q hi / 2) (pi^2/6) / (q^2 phi(q)), then
  // sum_{q > Q} 1/(q phi(q)) <= 2 C / Q and sum 1/(q^2 phi(q)) <= 2 C / Q^2.
  const double hi = E.hi;
  return std::abs(prefactor) * (kPi * kPi / 6.0) *
         (2.0 * kLandauTotientConstant / q) *
         (std::pow(hi, 1.5) / q + 0.5 * hi);
}

NuDensity nu_density(Interval E, std::uint64_t q_max, double prefactor,
                     const arith::ArithTables& tables, double tail_tolerance) {
  if (!(E.lo > 0.0) || !(E.hi > E.lo)) {
    throw DomainError("nu density needs a compact interval in (0, inf)");
  }
  if (q_max == 0) throw DomainError("q_max must be at least 1");
  if (q_max > tables.limit()) {
    throw DomainError("q_max " + std::to_string(q_max) + " beyond table limit");
  }

  const double tail = nu_tail_bound(E, q_max, prefactor);
  if (tail > tail_tolerance) {
    throw AccuracyError("q_max=" + std::to_string(q_max) +
                            " cannot certify nu tail tolerance " +
                            std::to_string(tail_tolerance),
                        std::numeric_limits<double>::quiet_NaN(), tail);
  }

  const double snap_lo = kEndpointSnap * E.lo;
  const double snap_hi = kEndpointSnap * E.hi;
  std::vector<Atom> atoms;
  std::size_t pairs = 0;
  for (std::uint64_t q = 1; q <= q_max; ++q) {
    if (tables.mobius(q) == 0) continue;
    const double qd = static_cast<double>(q);
    const double phi = static_cast<double>(tables.euler_phi(q));
    const double base = prefactor / (phi * phi * static_cast<double>(tables.divisor_sigma(q)));
    const auto a_first = static_cast<std::uint64_t>(
        std::max(1.0, std::floor(qd / std::sqrt(E.hi)) - 1.0));
    const auto a_last =
        static_cast<std::uint64_t>(std::ceil(qd / std::sqrt(E.lo)) + 1.0);
    for (std::uint64_t a = a_first; a <= a_last; ++a) {
      if (std::gcd(a, q) != 1) continue;
      const double ratio = qd / static_cast<double>(a);
      const double location = ratio * ratio;
      const bool at_lo = std::abs(location - E.lo) <= snap_lo;
      const bool at_hi = std::abs(location - E.hi) <= snap_hi;
      if (!at_lo && !at_hi && !E.contains(location)) continue;
      double mass = base * ratio * ratio * ratio;
      if (at_lo || at_hi) mass *= 0.5;
      atoms.push_back({at_lo ? E.lo : (at_hi ? E.hi : location), mass});
      ++pairs;
    }
  }
  return {DistributionValue(std::move(atoms), nullptr), tail, pairs};
}

double w_so(Parity parity, double x) {
  const double s = sinc_2pi(x);
  return parity == Parity::even ? 1.0 + s : 1.0 - s;
}

std::vector<Atom> w_so_atoms(Parity parity) {
  if (parity == Parity::odd) return {{0.0, 1.0}};
  return {};
}

double w_so_hat(Parity parity, double y) {
  const double ind = unit_indicator(y);
  return parity == Parity::odd ? ind / 2.0 : (2.0 - ind) / 2.0;
}

std::vector<Atom> w_so_hat_atoms(Parity) { return {{0.0, 1.0}}; }

DistributionValue w_so_distribution(Parity parity) {
  return DistributionValue(w_so_atoms(parity),
                           [parity](double x) { return w_so(parity, x); });
}

DistributionValue w_so_hat_distribution(Parity parity) {
  return DistributionValue(w_so_hat_atoms(parity),
                           [parity](double y) { return w_so_hat(parity, y); });
}

double old_pairing(const WeightFunction& phi_hat, Parity parity,
                   QuadratureOptions options) {
  const auto& s = phi_hat.support();
  if (!(s.lo > -2.0 && s.hi < 2.0)) {
    throw DomainError("pairing test function must be supported in (-2, 2)");
  }
  std::vector<double> breaks{s.lo, s.hi};
  for (double b : {-1.0, 0.0, 1.0}) {
    if (b > s.lo && b < s.hi) breaks.push_back(b);
  }
  std::sort(breaks.begin(), breaks.end());
  const auto integral = quadrature(
      [&](double x) { return phi_hat(x) * w_so_hat(parity, x); }, breaks,
      options);
  double atoms = 0.0;
  for (const auto& a : w_so_hat_atoms(parity)) atoms += a.mass * phi_hat(a.location);
  return integral.value + atoms;
}

double explicit_prime_sum(const frame::CoefficientFn& lambda, double N,
                          const WeightFunction& phi_hat,
                          const arith::ArithTables& tables) {
  if (!(N > 1.0)) throw DomainError("explicit formula needs N > 1");
  const auto& s = phi_hat.support();
  const double theta = std::max(std::abs(s.lo), std::abs(s.hi));
  const double log_n = std::log(N);
  const double reach = std::exp(theta * log_n);
  if (reach > static_cast<double>(tables.limit())) {
    throw DomainError("explicit formula needs primes up to " +
                      std::to_string(reach) + " beyond table limit");
  }
  CompensatedSum sum;
  for (std::uint32_t p : tables.primes_between(2, static_cast<std::uint64_t>(reach))) {
    const double lp = std::log(static_cast<double>(p));
    const double weight = phi_hat(lp / log_n);
    if (weight == 0.0) continue;
    double coefficient = 0.0;
    try {
      coefficient = lambda(p);
    } catch (const CoverageError&) {
      throw DataError("coefficient source is missing prime " + std::to_string(p));
    }
    sum.add(coefficient * lp / std::sqrt(static_cast<double>(p)) * weight);
  }
  return sum.value();
}

}  // namespace murmur::densities
