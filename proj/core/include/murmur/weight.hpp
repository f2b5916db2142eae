#pragma once

#include <cstdint>
#include <functional>
#include <string>

namespace murmur {

/// Closed interval [lo, hi].
struct Interval {
  double lo;
  double hi;

  double length() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
};

enum class WeightKind { bump, indicator, custom };

std::string to_string(WeightKind kind);

/// A bounded function with known compact support. Evaluation returns exactly
/// 0 outside the support.
///
/// bump and indicator weights are the cutoff functions used to window a
/// family by conductor, so they require 0 < lo < hi and are nonnegative. The
/// custom kind is also used for test functions on the Fourier side, which
/// live on symmetric intervals and may change sign; it only requires lo < hi.
class WeightFunction {
 public:
  WeightFunction(WeightKind kind, Interval support,
                 std::function<double(double)> evaluator, double max_abs);

  double operator()(double x) const {
    if (!(x >= support_.lo && x <= support_.hi)) return 0.0;
    return evaluator_(x);
  }

  WeightKind kind() const noexcept { return kind_; }
  const Interval& support() const noexcept { return support_; }
  double max_value() const noexcept { return max_abs_; }

  /// Sums against an indicator weight have no smooth-tail guarantees.
  bool is_smooth() const noexcept { return kind_ != WeightKind::indicator; }

  /// c * Phi with the same support.
  WeightFunction scaled(double c) const;

 private:
  WeightKind kind_;
  Interval support_;
  std::function<double(double)> evaluator_;
  double max_abs_;
};

/// exp(1 - 1/(1 - t^2)) with t the affine image of x in [-1, 1]; peak 1 at
/// the midpoint of [a, b].
WeightFunction bump(double a, double b);

/// 1 on [a, b], 0 elsewhere.
WeightFunction indicator(double a, double b);

/// Caller-supplied function on [lo, hi]; max_abs bounds |f| on the support.
WeightFunction custom_weight(Interval support, std::function<double(double)> f,
                             double max_abs);

/// How an infinite sum was (or should be) truncated.
struct TruncationPolicy {
  enum class Mode { fixed_cutoff, tail_bound };

  Mode mode = Mode::tail_bound;
  /// fixed_cutoff: the number of terms kept. tail_bound: the largest cutoff
  /// the caller is willing to pay for.
  std::uint64_t cutoff = 1'000'000;
  /// tail_bound mode: the omitted tail must be provably below this.
  double tail_tolerance = 1e-12;

  static TruncationPolicy fixed(std::uint64_t terms);
  static TruncationPolicy certified(double tolerance,
                                    std::uint64_t budget = 1'000'000);
};

/// A truncated sum together with a proven bound on what was left out.
struct TruncatedValue {
  double value = 0.0;
  double tail_bound = 0.0;
  std::uint64_t terms = 0;
};

}  // namespace murmur
