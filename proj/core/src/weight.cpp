#include "murmur/weight.hpp"

#include <cmath>
#include <utility>

#include "murmur/error.hpp"

namespace murmur {

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::bump: return "bump";
    case WeightKind::indicator: return "indicator";
    case WeightKind::custom: return "custom";
  }
  return "unknown";
}

WeightFunction::WeightFunction(WeightKind kind, Interval support,
                               std::function<double(double)> evaluator,
                               double max_abs)
    : kind_(kind),
      support_(support),
      evaluator_(std::move(evaluator)),
      max_abs_(max_abs) {
  if (!(support_.lo < support_.hi) || !std::isfinite(support_.lo) ||
      !std::isfinite(support_.hi)) {
    throw DomainError("weight support must be a finite interval with lo < hi");
  }
  if (kind_ != WeightKind::custom && !(support_.lo > 0.0)) {
    throw DomainError(to_string(kind_) + " weight needs support inside (0, inf)");
  }
  if (!evaluator_) throw DomainError("weight evaluator is empty");
  if (!(max_abs_ >= 0.0)) throw DomainError("weight bound must be nonnegative");
}

WeightFunction WeightFunction::scaled(double c) const {
  return WeightFunction(kind_, support_,
                        [f = evaluator_, c](double x) { return c * f(x); },
                        std::abs(c) * max_abs_);
}

WeightFunction bump(double a, double b) {
  if (!(a < b)) throw DomainError("bump requires a < b");
  const double mid = 0.5 * (a + b);
  const double half_width = 0.5 * (b - a);
  return WeightFunction(
      WeightKind::bump, {a, b},
      [mid, half_width](double x) {
        const double t = (x - mid) / half_width;
        const double gap = 1.0 - t * t;
        if (gap <= 0.0) return 0.0;
        return std::exp(1.0 - 1.0 / gap);
      },
      1.0);
}

WeightFunction indicator(double a, double b) {
  if (!(a < b)) throw DomainError("indicator requires a < b");
  return WeightFunction(WeightKind::indicator, {a, b},
                        [](double) { return 1.0; }, 1.0);
}

WeightFunction custom_weight(Interval support, std::function<double(double)> f,
                             double max_abs) {
  return WeightFunction(WeightKind::custom, support, std::move(f), max_abs);
}

TruncationPolicy TruncationPolicy::fixed(std::uint64_t terms) {
  if (terms == 0) throw DomainError("fixed cutoff must keep at least one term");
  TruncationPolicy p;
  p.mode = Mode::fixed_cutoff;
  p.cutoff = terms;
  return p;
}

TruncationPolicy TruncationPolicy::certified(double tolerance,
                                             std::uint64_t budget) {
  if (!(tolerance > 0.0)) throw DomainError("tail tolerance must be positive");
  if (budget == 0) throw DomainError("cutoff budget must be positive");
  TruncationPolicy p;
  p.mode = Mode::tail_bound;
  p.cutoff = budget;
  p.tail_tolerance = tolerance;
  return p;
}

}  // namespace murmur
