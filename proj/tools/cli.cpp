#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>

#include "murmur/arith.hpp"
#include "murmur/families.hpp"
#include "murmur/parallel.hpp"
#include "murmur/petersson.hpp"
#include "murmur/weight.hpp"

namespace murmur::cli {

namespace {

constexpr double kSixteenPiSq = 16.0 * std::numbers::pi * std::numbers::pi;

// Petersson c-sums never need more terms than this at CLI scale.
constexpr std::uint64_t kCutoffBudget = 100'000;

WeightFunction make_weight(const PhiSpec& spec) {
  if (spec.kind == "bump") return bump(spec.a, spec.b);
  if (spec.kind == "indicator") return indicator(spec.a, spec.b);
  throw DomainError("unknown weight kind '" + spec.kind + "'");
}

// Test functions on the Fourier side may straddle 0, so they are built as
// custom weights with the bump or indicator profile.
WeightFunction make_test_function(const PhiSpec& spec) {
  const double a = spec.a;
  const double b = spec.b;
  if (!(a < b)) throw DomainError("test function needs a < b");
  if (spec.kind == "indicator") {
    return custom_weight({a, b}, [](double) { return 1.0; }, 1.0);
  }
  if (spec.kind != "bump") throw DomainError("unknown weight kind '" + spec.kind + "'");
  return custom_weight(
      {a, b},
      [a, b](double x) {
        const double t = (2.0 * x - a - b) / (b - a);
        const double s = 1.0 - t * t;
        return s > 0.0 ? std::exp(1.0 - 1.0 / s) : 0.0;
      },
      1.0);
}

std::vector<std::uint64_t> primes_in(const arith::ArithTables& tables,
                                     double lo, double hi) {
  const auto first = static_cast<std::uint64_t>(std::max(0.0, std::ceil(lo)));
  const auto last = static_cast<std::uint64_t>(std::floor(hi));
  const auto span = tables.primes_between(first, last);
  return {span.begin(), span.end()};
}

arith::ArithTables tables_for(double reach) {
  return arith::ArithTables(static_cast<std::uint64_t>(
      std::max(1000.0, std::ceil(reach))));
}

struct PeakInfo {
  double y = 0.0;
  double value = 0.0;
};

PeakInfo peak_of(const Table& t) {
  PeakInfo best;
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (i == 0 || std::abs(t.value[i]) > std::abs(best.value)) {
      best = {t.y[i], t.value[i]};
    }
  }
  return best;
}

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

// || u/|u| - r/|r| || over aligned samples.
double shape_residual(std::span<const double> u, std::span<const double> r) {
  const double nu = norm(u);
  const double nr = norm(r);
  if (nu == 0.0 || nr == 0.0) return std::numeric_limits<double>::quiet_NaN();
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double d = u[i] / nu - r[i] / nr;
    s += d * d;
  }
  return std::sqrt(s);
}

Overlay overlay_of(const std::string& label, const Table& t) {
  return {label, t.y, t.value};
}

struct Artifacts {
  Table table;
  std::vector<Overlay> overlays;
  std::ostringstream summary;
};

std::string range_text(double lo, double hi) {
  return "[" + format_number(lo) + ", " + format_number(hi) + "]";
}

void describe_peak(Artifacts& a) {
  if (a.table.rows() == 0) return;
  const auto peak = peak_of(a.table);
  a.summary << " peak_y=" << format_number(peak.y)
            << " peak_value=" << format_number(peak.value);
}

void run_dirichlet(const RunConfig& c, unsigned workers, Artifacts& a) {
  const double y_hi = c.y_hi > 0.0 ? c.y_hi : 2.0;
  const auto phi = make_weight(c.phi);
  const auto tables = tables_for(y_hi * c.x);
  const auto primes = primes_in(tables, c.y_lo * c.x, y_hi * c.x);
  if (primes.empty()) throw DomainError("no primes in the requested y range");
  const auto series = families::quadratic_murmuration(c.x, phi, c.sign, primes,
                                                      c.normalization, workers);
  const auto binned = frame::bin_series(series, {c.y_lo, y_hi}, c.bins);
  a.table = Table::from_series(binned);
  a.overlays.push_back(overlay_of("quadratic characters", a.table));
  a.summary << "dirichlet X=" << format_number(c.x) << " primes=" << primes.size()
            << " rows=" << a.table.rows();
  describe_peak(a);
}

void run_weight_family(const RunConfig& c, unsigned workers, Artifacts& a,
                       bool symmetric_square) {
  const double K = c.k_scale > 0.0 ? c.k_scale : static_cast<double>(c.k_min);
  const double X = petersson::conductor_proxy(K);
  const double y_hi = c.y_hi > 0.0 ? c.y_hi : 3.0;
  const auto phi = make_weight(c.phi);
  const auto tables = tables_for(std::max<double>(kCutoffBudget, y_hi * X));
  const auto primes = primes_in(tables, c.y_lo * X, y_hi * X);
  if (primes.empty()) throw DomainError("no primes in the requested y range");
  const auto policy = TruncationPolicy::certified(c.tail_tolerance, kCutoffBudget);
  const petersson::WeightWindow window{c.k_min, c.k_max};

  const auto series =
      symmetric_square
          ? petersson::symsq_series(K, window, primes, phi, tables, policy, workers)
          : petersson::harmonic_series(K, window, primes, phi, c.sign, tables,
                                       policy, workers);
  const auto binned = frame::bin_series(series, {c.y_lo, y_hi}, c.bins);
  a.table = Table::from_series(binned);
  a.overlays.push_back(
      overlay_of(symmetric_square ? "symmetric square" : "harmonic average", a.table));
  a.summary << (symmetric_square ? "symsq" : "petersson") << " K=" << format_number(K)
            << " X=" << format_number(X) << " primes=" << primes.size()
            << " rows=" << a.table.rows();
  describe_peak(a);
  if (symmetric_square || c.sign == 0) return;

  // Reference density on the same axis: y = p / N(K) maps to p / X' with
  // X' = 16 pi^2 N(K), the scale in 16 pi^2 p / (c^2 X').
  std::vector<double> u, r;
  Overlay reference{"reference density (scaled)", {}, {}};
  for (std::size_t i = 0; i < a.table.rows(); ++i) {
    const double y = a.table.y[i];
    if (!(y > 0.0)) continue;
    const double ref =
        densities::ils_density(y / kSixteenPiSq, phi, c.sign, tables);
    reference.x.push_back(y);
    reference.y.push_back(ref);
    if (phi.support().contains(y)) {
      u.push_back(a.table.value[i]);
      r.push_back(ref);
    }
  }
  const double residual = shape_residual(u, r);
  const double scale = norm(u) / norm(r);
  if (std::isfinite(scale)) {
    for (double& v : reference.y) v *= scale;
  }
  a.overlays.push_back(std::move(reference));
  a.summary << " residual=" << format_number(residual);
}

void run_density_ils(const RunConfig& c, Artifacts& a) {
  const double y_hi = c.y_hi > 0.0 ? c.y_hi : 0.05;
  const auto phi = make_weight(c.phi);
  const double c_max = 4.0 * std::numbers::pi * std::sqrt(y_hi / phi.support().lo);
  const auto tables = tables_for(c_max + 2.0);
  const double h = (y_hi - c.y_lo) / static_cast<double>(c.points);
  for (std::size_t i = 0; i < c.points; ++i) {
    const double y = c.y_lo + (static_cast<double>(i) + 0.5) * h;
    a.table.y.push_back(y);
    a.table.value.push_back(densities::ils_density(y, phi, c.sign == 0 ? 1 : c.sign, tables));
  }
  a.overlays.push_back(overlay_of("murmuration density", a.table));
  a.summary << "density-ils y=" << range_text(c.y_lo, y_hi)
            << " rows=" << a.table.rows();
  describe_peak(a);
}

void run_density_nu(const RunConfig& c, Artifacts& a) {
  const Interval E{c.y_lo, c.y_hi};
  const auto tables = tables_for(static_cast<double>(c.q_max));
  const auto nu = densities::nu_density(E, c.q_max, c.prefactor, tables,
                                        c.nu_tolerance);
  const auto atoms = nu.distribution.atoms();
  a.table.atoms.assign(atoms.begin(), atoms.end());
  a.summary << "density-nu E=" << range_text(E.lo, E.hi)
            << " q_max=" << c.q_max << " atoms=" << atoms.size()
            << " mass=" << format_number(nu.distribution.total_atom_mass())
            << " tail_bound=" << format_number(nu.tail_bound);
}

void run_old_kernel(const RunConfig& c, Artifacts& a) {
  const PhiSpec spec = c.phi_given ? c.phi : PhiSpec{"bump", -1.0, 1.0};
  const auto phi_hat = make_test_function(spec);
  QuadratureOptions q;
  q.abs_tolerance = c.quad_tolerance;
  const double pairing = densities::old_pairing(phi_hat, c.parity, q);
  const double lo = c.y_hi > c.y_lo ? c.y_lo : -2.0;
  const double hi = c.y_hi > c.y_lo ? c.y_hi : 2.0;
  const double h = (hi - lo) / static_cast<double>(c.points);
  for (std::size_t i = 0; i < c.points; ++i) {
    const double y = lo + (static_cast<double>(i) + 0.5) * h;
    a.table.y.push_back(y);
    a.table.value.push_back(densities::w_so_hat(c.parity, y));
  }
  a.table.atoms = densities::w_so_hat_atoms(c.parity);
  a.overlays.push_back(overlay_of("kernel transform", a.table));
  a.summary << "old-kernel parity="
            << (c.parity == densities::Parity::even ? "even" : "odd")
            << " rows=" << a.table.rows()
            << " pairing=" << format_number(pairing);
}

void run_ingest(const RunConfig& c, unsigned workers, Artifacts& a) {
  const auto family = families::ingest(c.input);
  std::vector<frame::FamilyRecord> records;
  for (const auto& r : family.records) {
    if (c.sign == 0 || r.root_number == c.sign) records.push_back(r);
  }
  const double coverage = static_cast<double>(family.prime_coverage);
  const double y_hi = c.y_hi > 0.0 ? c.y_hi : coverage / c.x;
  const auto tables = tables_for(std::min(coverage, y_hi * c.x));
  const auto primes =
      primes_in(tables, c.y_lo * c.x, std::min(coverage, y_hi * c.x));
  if (primes.empty()) throw DomainError("no covered primes in the requested y range");
  const auto phi = make_weight(c.phi);
  const auto series = frame::murmuration_series(records, c.x, phi, primes,
                                                c.normalization, workers);
  const auto binned = frame::bin_series(series, {c.y_lo, y_hi}, c.bins);
  a.table = Table::from_series(binned);
  a.overlays.push_back(overlay_of("ingested family", a.table));
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx",
                static_cast<unsigned long long>(family.source_digest));
  a.summary << "ingest-run records=" << records.size() << " digest=" << digest
            << " primes=" << primes.size() << " rows=" << a.table.rows();
  describe_peak(a);
}

int parse_sign(const std::string& s) {
  if (s == "+1" || s == "1") return 1;
  if (s == "-1") return -1;
  if (s == "both") return 0;
  throw DomainError("sign must be +1, -1 or both, got '" + s + "'");
}

}  // namespace

int exit_code(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::domain:
    case ErrorCategory::size:
      return kUsage;
    case ErrorCategory::data:
    case ErrorCategory::coverage:
    case ErrorCategory::io:
      return kData;
    case ErrorCategory::accuracy:
      return kAccuracy;
    case ErrorCategory::window:
      return kWindow;
  }
  return kUsage;
}

void validate(const RunConfig& c) {
  if (c.bins < 1) throw DomainError("bins must be at least 1");
  if (c.points < 1) throw DomainError("points must be at least 1");
  if (c.sign < -1 || c.sign > 1) throw DomainError("sign must be +1, -1 or both");
  if (!(c.tail_tolerance > 0.0) || !(c.quad_tolerance > 0.0)) {
    throw DomainError("tolerances must be positive");
  }
  if (c.y_lo < 0.0 && c.command != Command::old_kernel) {
    throw DomainError("y range must be nonnegative");
  }
  if (c.y_hi != 0.0 && !(c.y_hi > c.y_lo)) throw DomainError("empty y range");
  if (c.out.empty()) throw DomainError("output prefix must not be empty");
  switch (c.command) {
    case Command::dirichlet:
    case Command::ingest_run:
      if (!(c.x > 0.0)) throw DomainError("--x must be positive");
      break;
    case Command::petersson:
    case Command::symsq:
      if (c.k_min < 4 || c.k_max < c.k_min) {
        throw DomainError("--k-window needs 4 <= k_min <= k_max");
      }
      if (c.k_scale < 0.0) throw DomainError("--k must be positive");
      break;
    case Command::density_nu:
      if (!(c.y_lo > 0.0) || !(c.y_hi > c.y_lo)) {
        throw DomainError("--interval needs 0 < lo < hi");
      }
      if (c.q_max < 1) throw DomainError("--q-max must be at least 1");
      break;
    case Command::density_ils:
    case Command::old_kernel:
      break;
  }
}

unsigned effective_workers(const RunConfig& config) {
  if (const char* env = std::getenv("MURMUR_WORKERS"); env && *env) {
    unsigned value = 0;
    const std::string_view text(env);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || value == 0) {
      throw DomainError("MURMUR_WORKERS must be a positive integer");
    }
    return value;
  }
  return resolve_workers(config.workers);
}

std::string run(const RunConfig& config) {
  validate(config);
  const unsigned workers = effective_workers(config);
  Artifacts a;
  switch (config.command) {
    case Command::dirichlet: run_dirichlet(config, workers, a); break;
    case Command::petersson: run_weight_family(config, workers, a, false); break;
    case Command::symsq: run_weight_family(config, workers, a, true); break;
    case Command::density_ils: run_density_ils(config, a); break;
    case Command::density_nu: run_density_nu(config, a); break;
    case Command::old_kernel: run_old_kernel(config, a); break;
    case Command::ingest_run: run_ingest(config, workers, a); break;
  }
  const std::string csv = config.out + ".csv";
  emit_csv(a.table, csv);
  a.summary << " csv=" << csv;
  if (config.plot) {
    const std::string svg = config.out + ".svg";
    emit_svg(a.overlays, a.table.atoms, svg);
    a.summary << " svg=" << svg;
  }
  return a.summary.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  RunConfig config;
  CLI::App app{"Murmuration averages for families of L-functions"};
  app.require_subcommand(1);

  std::vector<std::string> phi_args;
  std::string sign_text = "+1";
  std::vector<int> k_window;
  std::vector<double> y_range;
  std::string parity_text = "even";
  std::string normalization_text = "raw";

  const auto common = [&](CLI::App* sub) {
    sub->add_option("--phi", phi_args, "Weight: bump|indicator a b")->expected(3);
    sub->add_option("--sign", sign_text, "Sign class: +1, -1 or both");
    sub->add_option("--bins", config.bins, "Number of y bins");
    sub->add_option("--out", config.out, "Output path prefix");
    sub->add_flag("--plot", config.plot, "Also write an SVG plot");
    sub->add_option("--y-range", y_range, "Sample range lo hi")->expected(2);
    sub->add_option("--points", config.points, "Grid points for densities");
    sub->add_option("--tail-tol", config.tail_tolerance, "Certified tail tolerance");
    sub->add_option("--quad-tol", config.quad_tolerance, "Quadrature tolerance");
    sub->add_option("--workers", config.workers, "Worker threads (0: all cores)");
  };

  auto* dirichlet = app.add_subcommand("dirichlet", "Quadratic character family");
  dirichlet->add_option("--x", config.x, "Conductor scale X")->required();
  dirichlet->add_option("--normalization", normalization_text, "raw or analytic");
  common(dirichlet);

  auto* petersson = app.add_subcommand("petersson", "Harmonic weight-aspect average");
  auto* symsq = app.add_subcommand("symsq", "Symmetric-square average");
  for (auto* sub : {petersson, symsq}) {
    sub->add_option("--k-window", k_window, "Weights k_min k_max")
        ->expected(2)
        ->required();
    sub->add_option("--k", config.k_scale, "Weight scale K (default k_min)");
    common(sub);
  }

  auto* ils = app.add_subcommand("density-ils", "Harmonic murmuration density");
  common(ils);

  auto* nu = app.add_subcommand("density-nu", "Point-mass murmuration density");
  std::vector<double> interval;
  nu->add_option("--interval", interval, "Interval E = lo hi")->expected(2)->required();
  nu->add_option("--q-max", config.q_max, "Largest q enumerated");
  nu->add_option("--prefactor", config.prefactor, "Overall prefactor");
  nu->add_option("--nu-tol", config.nu_tolerance, "Required tail bound");
  common(nu);

  auto* kernel = app.add_subcommand("old-kernel", "Orthogonal one-level kernels");
  kernel->add_option("--parity", parity_text, "even or odd");
  common(kernel);

  auto* ingest = app.add_subcommand("ingest-run", "Series from an ingested family");
  ingest->add_option("--input", config.input, "Family file")->required();
  ingest->add_option("--x", config.x, "Conductor scale X")->required();
  ingest->add_option("--normalization", normalization_text, "raw or analytic");
  common(ingest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dirichlet) config.command = Command::dirichlet;
    if (*petersson) config.command = Command::petersson;
    if (*symsq) config.command = Command::symsq;
    if (*ils) config.command = Command::density_ils;
    if (*nu) config.command = Command::density_nu;
    if (*kernel) config.command = Command::old_kernel;
    if (*ingest) config.command = Command::ingest_run;

    if (!phi_args.empty()) {
      config.phi.kind = phi_args[0];
      try {
        config.phi.a = std::stod(phi_args[1]);
        config.phi.b = std::stod(phi_args[2]);
      } catch (const std::exception&) {
        throw DomainError("--phi bounds must be numbers");
      }
      config.phi_given = true;
    }
    config.sign = parse_sign(sign_text);
    if (k_window.size() == 2) {
      config.k_min = k_window[0];
      config.k_max = k_window[1];
    }
    if (y_range.size() == 2) {
      config.y_lo = y_range[0];
      config.y_hi = y_range[1];
    }
    if (interval.size() == 2) {
      config.y_lo = interval[0];
      config.y_hi = interval[1];
    }
    if (parity_text == "even") {
      config.parity = densities::Parity::even;
    } else if (parity_text == "odd") {
      config.parity = densities::Parity::odd;
    } else {
      throw DomainError("--parity must be even or odd");
    }
    if (normalization_text == "raw") {
      config.normalization = frame::Normalization::raw_sqrtp;
    } else if (normalization_text == "analytic") {
      config.normalization = frame::Normalization::analytic;
    } else {
      throw DomainError("--normalization must be raw or analytic");
    }

    out << run(config) << '\n';
    return kOk;
  } catch (const Error& e) {
    err << "murmur: " << to_string(e.category()) << " error: " << e.what() << '\n';
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "murmur: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace murmur::cli
