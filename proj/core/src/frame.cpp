#include "murmur/frame.hpp"

#include <algorithm>
#include <cmath>

#include "murmur/error.hpp"
#include "murmur/parallel.hpp"
#include "murmur/summation.hpp"

namespace murmur::frame {

std::string to_string(Normalization n) {
  return n == Normalization::analytic ? "analytic" : "raw_sqrtp";
}

double FamilyRecord::raw_coefficient(std::uint64_t p) const {
  if (raw) return raw(p);
  return lambda(p) * std::sqrt(static_cast<double>(p));
}

double FamilyRecord::coefficient(std::uint64_t p, Normalization n) const {
  return n == Normalization::analytic ? lambda(p) : raw_coefficient(p);
}

void validate(const FamilyRecord& record) {
  if (record.root_number != 1 && record.root_number != -1) {
    throw ValidationError("record '" + record.label + "' has root number " +
                          std::to_string(record.root_number));
  }
  if (!(record.conductor > 0.0) || !std::isfinite(record.conductor)) {
    throw ValidationError("record '" + record.label +
                          "' has non-positive conductor");
  }
  if (!record.lambda) {
    throw ValidationError("record '" + record.label +
                          "' has no coefficient accessor");
  }
}

void check_normalization_bridge(const FamilyRecord& record,
                                std::span<const std::uint64_t> primes) {
  if (!record.raw || !record.lambda) return;
  for (std::uint64_t p : primes) {
    const double a = record.raw(p);
    const double expected = record.lambda(p) * std::sqrt(static_cast<double>(p));
    const double scale = std::max(std::abs(a), std::abs(expected));
    if (std::abs(a - expected) > 1e-9 * scale) {
      throw ValidationError("record '" + record.label +
                            "': raw and analytic coefficients disagree at p=" +
                            std::to_string(p));
    }
  }
}

WeightedWindow::WeightedWindow(std::span<const FamilyRecord> family, double X,
                               const WeightFunction& phi)
    : X_(X) {
  if (!(X > 0.0)) throw DomainError("window scale X must be positive");
  CompensatedSum total;
  for (std::size_t i = 0; i < family.size(); ++i) {
    const double w = phi(family[i].conductor / X);
    if (w == 0.0) continue;
    members_.push_back(i);
    weights_.push_back(w);
    total.add(w);
  }
  total_ = total.value();
}

double WeightedWindow::average(std::span<const double> values) const {
  if (total_ == 0.0) {
    throw WindowError("no family member has nonzero weight at X=" +
                      std::to_string(X_));
  }
  CompensatedSum sum;
  for (std::size_t i = 0; i < weights_.size(); ++i) sum.add(weights_[i] * values[i]);
  return sum.value() / total_;
}

double weighted_sum(std::span<const FamilyRecord> family, const RecordFn& f,
                    double X, const WeightFunction& phi) {
  const WeightedWindow window(family, X, phi);
  CompensatedSum sum;
  const auto members = window.members();
  const auto weights = window.weights();
  for (std::size_t i = 0; i < members.size(); ++i) {
    sum.add(weights[i] * f(family[members[i]]));
  }
  return sum.value();
}

double expectation(std::span<const FamilyRecord> family, const RecordFn& f,
                   double X, const WeightFunction& phi) {
  const WeightedWindow window(family, X, phi);
  std::vector<double> values;
  values.reserve(window.members().size());
  for (std::size_t idx : window.members()) values.push_back(f(family[idx]));
  return window.average(values);
}

void MurmurationSeries::validate() const {
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (samples[i].count < 1) {
      throw ValidationError("series sample " + std::to_string(i) +
                            " has zero count");
    }
    if (i > 0 && !(samples[i].y > samples[i - 1].y)) {
      throw ValidationError("series y values are not strictly increasing at " +
                            std::to_string(i));
    }
  }
}

namespace {

void check_primes(std::span<const std::uint64_t> primes) {
  if (primes.empty()) throw DomainError("murmuration series needs primes");
  for (std::size_t i = 1; i < primes.size(); ++i) {
    if (primes[i] <= primes[i - 1]) {
      throw DomainError("primes must be strictly ascending");
    }
  }
}

}  // namespace

MurmurationSeries murmuration_series(std::span<const FamilyRecord> family,
                                     double X, const WeightFunction& phi,
                                     std::span<const std::uint64_t> primes,
                                     Normalization normalization,
                                     const ColumnFn& columns,
                                     unsigned workers) {
  check_primes(primes);
  const WeightedWindow window(family, X, phi);
  if (window.empty()) {
    throw WindowError("family has no member with nonzero weight at X=" +
                      std::to_string(X));
  }

  auto samples = parallel_map(primes.size(), workers, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    std::vector<double> values(window.members().size());
    columns(p, window.members(), values);
    if (normalization == Normalization::raw_sqrtp) {
      const double root = std::sqrt(static_cast<double>(p));
      for (double& v : values) v *= root;
    }
    SeriesSample s;
    s.y = static_cast<double>(p) / X;
    s.value = window.average(values);
    return s;
  });

  MurmurationSeries series{std::move(samples), X, normalization};
  series.validate();
  return series;
}

MurmurationSeries murmuration_series(std::span<const FamilyRecord> family,
                                     double X, const WeightFunction& phi,
                                     std::span<const std::uint64_t> primes,
                                     Normalization normalization,
                                     unsigned workers) {
  // Raw accessors, when present, are authoritative for raw mode.
  check_primes(primes);
  const WeightedWindow window(family, X, phi);
  if (window.empty()) {
    throw WindowError("family has no member with nonzero weight at X=" +
                      std::to_string(X));
  }
  auto samples = parallel_map(primes.size(), workers, [&](std::size_t i) {
    const std::uint64_t p = primes[i];
    std::vector<double> values;
    values.reserve(window.members().size());
    for (std::size_t idx : window.members()) {
      values.push_back(family[idx].coefficient(p, normalization));
    }
    SeriesSample s;
    s.y = static_cast<double>(p) / X;
    s.value = window.average(values);
    return s;
  });
  MurmurationSeries series{std::move(samples), X, normalization};
  series.validate();
  return series;
}

MurmurationSeries bin_series(const MurmurationSeries& series, Interval y_range,
                             std::size_t bins) {
  if (bins == 0) throw DomainError("bin count must be at least 1");
  if (!(y_range.lo < y_range.hi)) throw DomainError("empty y range for binning");

  struct Acc {
    double weight = 0.0;
    CompensatedSum sum;
    std::uint64_t count = 0;
    std::vector<std::pair<double, std::uint64_t>> values;
  };
  std::vector<Acc> acc(bins);
  const double width = y_range.length() / static_cast<double>(bins);

  for (const auto& s : series.samples) {
    if (s.y < y_range.lo || s.y > y_range.hi) continue;
    auto index = static_cast<std::size_t>((s.y - y_range.lo) / width);
    if (index >= bins) index = bins - 1;
    auto& a = acc[index];
    a.sum.add(static_cast<double>(s.count) * s.value);
    a.count += s.count;
    a.values.emplace_back(s.value, s.count);
  }

  MurmurationSeries out;
  out.window_scale = series.window_scale;
  out.normalization = series.normalization;
  for (std::size_t b = 0; b < bins; ++b) {
    auto& a = acc[b];
    if (a.count == 0) continue;
    const double n = static_cast<double>(a.count);
    const double mean = a.sum.value() / n;
    double se = 0.0;
    if (a.count > 1) {
      CompensatedSum ss;
      for (const auto& [v, c] : a.values) {
        ss.add(static_cast<double>(c) * (v - mean) * (v - mean));
      }
      se = std::sqrt(ss.value() / (n - 1.0) / n);
    }
    SeriesSample s;
    s.y = y_range.lo + (static_cast<double>(b) + 0.5) * width;
    s.value = mean;
    s.count = a.count;
    s.std_error = se;
    out.samples.push_back(s);
  }
  return out;
}

double prime_window_average(const PrimeWindowTerms& terms, Interval E, double N,
                            const arith::ArithTables& tables) {
  if (!(E.lo > 0.0) || !(E.hi > E.lo)) {
    throw DomainError("prime window must be a compact interval in (0, inf) "
                      "with positive length");
  }
  if (!(N > 0.0)) throw DomainError("prime window scale must be positive");
  const double hi = N * E.hi;
  if (hi > static_cast<double>(tables.limit())) {
    throw DomainError("prime window reaches " + std::to_string(hi) +
                      " beyond table limit " + std::to_string(tables.limit()));
  }
  const auto lo_int = static_cast<std::uint64_t>(std::ceil(N * E.lo));
  const auto hi_int = static_cast<std::uint64_t>(std::floor(hi));

  CompensatedSum num, den;
  std::size_t used = 0;
  for (std::uint32_t p : tables.primes_between(lo_int, hi_int)) {
    const double ratio = static_cast<double>(p) / N;
    if (!E.contains(ratio)) continue;
    const double lp = std::log(static_cast<double>(p));
    num.add(lp * terms.numerator(p));
    den.add(lp * terms.denominator(p));
    ++used;
  }
  if (used == 0) throw WindowError("no primes with p/N in the window");
  if (den.value() == 0.0) throw WindowError("prime window denominator vanishes");
  return num.value() / den.value();
}

}  // namespace murmur::frame
