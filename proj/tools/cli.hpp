#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "murmur/densities.hpp"
#include "murmur/error.hpp"
#include "murmur/frame.hpp"

namespace murmur::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kData = 2,
  kAccuracy = 3,
  kWindow = 4,
};

/// Exit code for a library error category.
int exit_code(ErrorCategory category) noexcept;

// ---------------------------------------------------------------------------
// Output.

/// Shortest round-trip decimal form; integral values keep a trailing ".0".
std::string format_number(double v);

/// Rows for a CSV file. With counts the header is `y,value,count`,
/// otherwise `y,value`. Atoms are written first as `#atom location mass`.
struct Table {
  std::vector<densities::Atom> atoms;
  std::vector<double> y;
  std::vector<double> value;
  std::optional<std::vector<std::uint64_t>> count;

  static Table from_series(const frame::MurmurationSeries& series);
  std::size_t rows() const noexcept { return y.size(); }
};

void emit_csv(const Table& table, std::ostream& out);
/// Throws IoError naming the path.
void emit_csv(const Table& table, const std::string& path);

struct Overlay {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

/// 1200x600 SVG with one polyline per overlay and atoms as vertical spikes.
void emit_svg(std::span<const Overlay> overlays,
              std::span<const densities::Atom> atoms, std::ostream& out);
void emit_svg(std::span<const Overlay> overlays,
              std::span<const densities::Atom> atoms, const std::string& path);

// ---------------------------------------------------------------------------
// Configuration and dispatch.

enum class Command {
  dirichlet,
  petersson,
  symsq,
  density_ils,
  density_nu,
  old_kernel,
  ingest_run,
};

struct PhiSpec {
  std::string kind = "bump";  // bump | indicator
  double a = 1.0;
  double b = 2.0;
};

struct RunConfig {
  Command command = Command::dirichlet;
  double x = 0.0;                    // conductor scale X
  double k_scale = 0.0;              // K; 0 means k_min
  int k_min = 0;
  int k_max = 0;
  PhiSpec phi;
  bool phi_given = false;            // old-kernel defaults to bump(-1, 1)
  int sign = 1;                      // +1, -1, or 0 for both
  std::size_t bins = 100;
  std::string out = "murmur";
  bool plot = false;
  double y_lo = 0.0;
  double y_hi = 0.0;                 // 0 picks a per-command default
  std::size_t points = 400;
  double tail_tolerance = 1e-12;
  double quad_tolerance = 1e-9;
  std::uint64_t q_max = 500;
  double prefactor = 1.0;
  double nu_tolerance = std::numeric_limits<double>::infinity();
  densities::Parity parity = densities::Parity::even;
  std::string input;
  frame::Normalization normalization = frame::Normalization::raw_sqrtp;
  unsigned workers = 0;              // 0 means machine parallelism
};

/// Throws DomainError for values outside the documented ranges.
void validate(const RunConfig& config);

/// Worker count after the MURMUR_WORKERS override.
unsigned effective_workers(const RunConfig& config);

/// Runs one experiment and writes the artifacts. Returns the summary line.
/// Library errors propagate.
std::string run(const RunConfig& config);

/// Parses argv, runs, prints the summary to `out` and errors to `err`, and
/// returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err);

}  // namespace murmur::cli
