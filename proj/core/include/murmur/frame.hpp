#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "murmur/arith.hpp"
#include "murmur/weight.hpp"

namespace murmur::frame {

using CoefficientFn = std::function<double(std::uint64_t p)>;

enum class Normalization {
  analytic,   // lambda(p)
  raw_sqrtp,  // a(p) = lambda(p) sqrt(p)
};

std::string to_string(Normalization n);

/// Bookkeeping for one L-function in a family.
struct FamilyRecord {
  std::string label;
  double conductor = 1.0;
  int root_number = 1;
  CoefficientFn lambda;  // analytically normalized coefficient at primes
  CoefficientFn raw;     // optional a(p); derived from lambda when empty

  double coefficient(std::uint64_t p, Normalization n) const;
  double raw_coefficient(std::uint64_t p) const;
};

/// Throws ValidationError unless root_number is +-1, the conductor is
/// positive and lambda is set.
void validate(const FamilyRecord& record);

/// When both accessors are present, checks a(p) = lambda(p) sqrt(p) to
/// relative 1e-9 at the given primes (ValidationError otherwise).
void check_normalization_bridge(const FamilyRecord& record,
                                std::span<const std::uint64_t> primes);

using RecordFn = std::function<double(const FamilyRecord&)>;

/// A(f, X) = sum over records of Phi(N / X) f(record). Records whose scaled
/// conductor falls outside supp(Phi) are skipped.
double weighted_sum(std::span<const FamilyRecord> family, const RecordFn& f,
                    double X, const WeightFunction& phi);

/// E[f; X] = A(f, X) / A(1, X). Throws WindowError when A(1, X) = 0.
double expectation(std::span<const FamilyRecord> family, const RecordFn& f,
                   double X, const WeightFunction& phi);

/// The records of a family that carry nonzero weight Phi(N / X), with the
/// weights precomputed. Membership order follows the family order.
class WeightedWindow {
 public:
  WeightedWindow(std::span<const FamilyRecord> family, double X,
                 const WeightFunction& phi);

  std::span<const std::size_t> members() const noexcept { return members_; }
  std::span<const double> weights() const noexcept { return weights_; }
  double total_weight() const noexcept { return total_; }
  double scale() const noexcept { return X_; }
  bool empty() const noexcept { return members_.empty(); }

  /// sum_i w_i values[i] / sum_i w_i for values aligned with members().
  double average(std::span<const double> values) const;

 private:
  double X_;
  std::vector<std::size_t> members_;
  std::vector<double> weights_;
  double total_ = 0.0;
};

struct SeriesSample {
  double y = 0.0;
  double value = 0.0;
  std::uint64_t count = 1;
  double std_error = 0.0;  // spread of the underlying samples, 0 if unknown
};

/// Sampled murmuration function y = p / X -> expectation.
struct MurmurationSeries {
  std::vector<SeriesSample> samples;
  double window_scale = 1.0;
  Normalization normalization = Normalization::analytic;

  /// Throws ValidationError unless y is strictly increasing and every count
  /// is at least 1.
  void validate() const;
};

/// Fills out[i] with the analytic coefficient lambda(p) of record
/// members[i]. Lets a family supply a vectorized evaluator.
using ColumnFn = std::function<void(std::uint64_t p,
                                    std::span<const std::size_t> members,
                                    std::span<double> out)>;

/// One sample per prime: y = p / X and value = E[lambda(p); X] (times sqrt(p)
/// for raw_sqrtp). Primes must be nonempty and strictly ascending. Work is
/// spread over primes; the result does not depend on the worker count.
MurmurationSeries murmuration_series(std::span<const FamilyRecord> family,
                                     double X, const WeightFunction& phi,
                                     std::span<const std::uint64_t> primes,
                                     Normalization normalization,
                                     unsigned workers = 1);

/// Same, with coefficients supplied column-wise by `columns`.
MurmurationSeries murmuration_series(std::span<const FamilyRecord> family,
                                     double X, const WeightFunction& phi,
                                     std::span<const std::uint64_t> primes,
                                     Normalization normalization,
                                     const ColumnFn& columns,
                                     unsigned workers = 1);

/// Groups samples into `bins` equal-width bins over y_range. Each bin
/// reports its center, the count-weighted mean, the total count and the
/// standard error of the mean. Empty bins are dropped.
MurmurationSeries bin_series(const MurmurationSeries& series, Interval y_range,
                             std::size_t bins);

/// Numerator and denominator terms of a log p weighted prime average.
struct PrimeWindowTerms {
  std::function<double(std::uint64_t)> numerator;
  std::function<double(std::uint64_t)> denominator;
};

/// (sum_{p/N in E} log p num(p)) / (sum_{p/N in E} log p den(p)) over the
/// same primes. Throws WindowError if no prime lies in the window and
/// DomainError if the tables do not reach N * E.hi.
double prime_window_average(const PrimeWindowTerms& terms, Interval E,
                            double N, const arith::ArithTables& tables);

}  // namespace murmur::frame
