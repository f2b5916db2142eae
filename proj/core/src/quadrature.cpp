#include "murmur/quadrature.hpp"

#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <queue>
#include <vector>

#include "murmur/error.hpp"

namespace murmur {

namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;

  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel integrate_panel(const std::function<double(double)>& f, double a,
                      double b) {
  double error = 0.0;
  const double value =
      boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
          f, a, b, 0, 0.0, &error);
  return {a, b, value, error};
}

}  // namespace

QuadratureResult quadrature(const std::function<double(double)>& f,
                            std::span<const double> breaks,
                            QuadratureOptions options) {
  if (breaks.size() < 2) throw DomainError("quadrature needs at least one panel");
  if (!std::is_sorted(breaks.begin(), breaks.end())) {
    throw DomainError("quadrature breakpoints must be ascending");
  }

  std::priority_queue<Panel> panels;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (breaks[i] == breaks[i + 1]) continue;
    panels.push(integrate_panel(f, breaks[i], breaks[i + 1]));
  }

  auto totals = [&] {
    // Sum in a fixed order so results do not depend on heap layout.
    std::vector<Panel> all;
    auto copy = panels;
    while (!copy.empty()) {
      all.push_back(copy.top());
      copy.pop();
    }
    std::sort(all.begin(), all.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    QuadratureResult r;
    for (const auto& p : all) {
      r.value += p.value;
      r.error += p.error;
    }
    r.intervals = static_cast<int>(all.size());
    return r;
  };

  double error = 0.0;
  {
    auto copy = panels;
    while (!copy.empty()) {
      error += copy.top().error;
      copy.pop();
    }
  }

  while (error > options.abs_tolerance) {
    if (static_cast<int>(panels.size()) >= options.max_intervals) {
      const auto best = totals();
      throw AccuracyError("quadrature did not reach tolerance within " +
                              std::to_string(options.max_intervals) +
                              " panels",
                          best.value, best.error);
    }
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      const auto best = totals();
      throw AccuracyError("quadrature panel collapsed below double resolution",
                          best.value + worst.value, best.error + worst.error);
    }
    const Panel left = integrate_panel(f, worst.a, mid);
    const Panel right = integrate_panel(f, mid, worst.b);
    error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  return totals();
}

QuadratureResult quadrature(const std::function<double(double)>& f,
                            Interval interval, QuadratureOptions options) {
  if (interval.lo == interval.hi) return {};
  const double breaks[] = {interval.lo, interval.hi};
  return quadrature(f, breaks, options);
}

}  // namespace murmur
