#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "murmur/arith.hpp"
#include "murmur/frame.hpp"
#include "murmur/quadrature.hpp"
#include "murmur/weight.hpp"

namespace murmur::densities {

/// A point mass.
struct Atom {
  double location;
  double mass;
};

/// A density split into point masses and a continuous part. Atoms are kept
/// apart from the function; the continuous part is finite at atom locations.
class DistributionValue {
 public:
  /// Throws DomainError if atom locations repeat or masses are not finite.
  /// Atoms are sorted by location.
  DistributionValue(std::vector<Atom> atoms,
                    std::function<double(double)> continuous);

  std::span<const Atom> atoms() const noexcept { return atoms_; }
  double continuous(double x) const { return continuous_(x); }
  double total_atom_mass() const;

 private:
  std::vector<Atom> atoms_;
  std::function<double(double)> continuous_;
};

// ---------------------------------------------------------------------------
// Murmuration density for the harmonic weight-aspect family.

/// Moduli c with 16 pi^2 y / c^2 inside supp(Phi) (before the mu^2 filter).
std::vector<std::uint64_t> ils_admissible_moduli(double y,
                                                 const WeightFunction& phi);

/// sign * 4 pi sum_{c >= 1} mu(c)^2 / (c^2 phi(c)) Phi(16 pi^2 y / c^2).
/// Only finitely many c satisfy the support condition, so the sum is exact.
double ils_density(double y, const WeightFunction& phi, int sign,
                   const arith::ArithTables& tables);

// ---------------------------------------------------------------------------
// Point-mass density nu(E).

/// Locations within this relative distance of an endpoint of E count as
/// sitting on the endpoint (and get half mass).
inline constexpr double kEndpointSnap = 1e-12;

struct NuDensity {
  DistributionValue distribution;
  double tail_bound = 0.0;  // proven bound on the mass with q > q_max
  std::size_t pairs = 0;    // number of (a, q) pairs enumerated
};

/// Atoms at (q/a)^2 in E over coprime a, q with q <= q_max squarefree and
/// mass prefactor * mu(q)^2 / (phi(q)^2 sigma(q)) * (q/a)^3, halved at the
/// endpoints of E. tail_bound covers every omitted q > q_max. Throws
/// AccuracyError when tail_bound exceeds tail_tolerance.
NuDensity nu_density(Interval E, std::uint64_t q_max, double prefactor,
                     const arith::ArithTables& tables,
                     double tail_tolerance = std::numeric_limits<double>::infinity());

/// Proven bound on the nu(E) mass carried by squarefree q > q_max.
double nu_tail_bound(Interval E, std::uint64_t q_max, double prefactor);

// ---------------------------------------------------------------------------
// One-level-density kernels of the orthogonal symmetry types.

enum class Parity { even, odd };

/// Continuous part of W: 1 + sinc for even, 1 - sinc for odd, where
/// sinc(x) = sin(2 pi x) / (2 pi x) with value 1 at x = 0.
double w_so(Parity parity, double x);

/// Atoms of W: none for even, a unit mass at 0 for odd.
std::vector<Atom> w_so_atoms(Parity parity);

/// Continuous part of the Fourier transform: 1[-1,1](y)/2 for odd and
/// (2 - 1[-1,1](y))/2 for even.
double w_so_hat(Parity parity, double y);

/// Atoms of the Fourier transform: a unit mass at 0 for both parities.
std::vector<Atom> w_so_hat_atoms(Parity parity);

DistributionValue w_so_distribution(Parity parity);
DistributionValue w_so_hat_distribution(Parity parity);

/// integral of phi_hat(x) * What(x) dx including the atom at 0. phi_hat must
/// be supported inside (-2, 2).
double old_pairing(const WeightFunction& phi_hat, Parity parity,
                   QuadratureOptions options = {});

/// sum over primes p <= N^theta of lambda(p) log p / sqrt(p) phi_hat(log p /
/// log N), where [-theta, theta] covers supp(phi_hat). A CoverageError from
/// the coefficient source becomes a DataError naming the prime.
double explicit_prime_sum(const frame::CoefficientFn& lambda, double N,
                          const WeightFunction& phi_hat,
                          const arith::ArithTables& tables);

}  // namespace murmur::densities
