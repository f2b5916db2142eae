#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "murmur/arith.hpp"
#include "murmur/frame.hpp"
#include "murmur/weight.hpp"

namespace murmur::families {

// ---------------------------------------------------------------------------
// Real primitive quadratic characters.

/// d = 1 mod 4 squarefree, or d = 4m with m = 2, 3 mod 4 squarefree.
/// d = 1 is excluded (trivial character).
bool is_fundamental_discriminant(std::int64_t d) noexcept;

struct QuadraticCharacter {
  std::int64_t d = 0;
  std::uint64_t conductor = 0;  // |d|
  int parity_class = 0;         // sign of d

  explicit QuadraticCharacter(std::int64_t discriminant);

  /// chi_d(n) = (d | n).
  int operator()(std::int64_t n) const noexcept { return arith::kronecker(d, n); }
};

/// Every fundamental discriminant with |d| / X in `support`, both signs,
/// ordered by conductor then by sign (negative first).
std::vector<QuadraticCharacter> enumerate_quadratic(double X, Interval support);

/// Family records for the characters of the given parity class (+1, -1 or
/// 0 for both), with lambda(p) = chi_d(p) and root number +1.
std::vector<frame::FamilyRecord> quadratic_records(
    std::span<const QuadraticCharacter> characters, int parity_class);

/// E[chi_d(p); X; Phi] over the chosen sign class (+1, -1, or 0 for both)
/// at each prime. Uses a per-prime residue table, so the cost per prime is
/// O(p + members).
frame::MurmurationSeries quadratic_murmuration(
    double X, const WeightFunction& phi, int parity_class,
    std::span<const std::uint64_t> primes,
    frame::Normalization normalization = frame::Normalization::analytic,
    unsigned workers = 1);

// ---------------------------------------------------------------------------
// Ingested coefficient tables.

/// Raw contents of one ingested record.
struct RecordData {
  std::string label;
  double conductor = 1.0;
  int root_number = 1;
  std::map<std::uint64_t, double> ap;  // raw a(p) = lambda(p) sqrt(p)
};

struct IngestedFamily {
  std::vector<frame::FamilyRecord> records;
  std::shared_ptr<const std::vector<RecordData>> data;
  std::uint64_t source_digest = 0;  // FNV-1a 64 of the normalized bytes
  std::uint64_t prime_coverage = 0; // largest prime present in the file
};

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

/// CRLF and lone CR become LF.
std::string normalize_line_endings(std::string_view text);

/// Parses the `#murmur-family v1` format. Throws ParseError (with line
/// number) for malformed rows and ValidationError for bad root numbers,
/// conductors below 1, duplicate labels or coefficients for unknown
/// labels. Coefficient lookups for absent primes throw CoverageError.
IngestedFamily parse_family(std::string_view text);

/// Reads and parses a file. Throws IoError if it cannot be read.
IngestedFamily ingest(const std::string& path);

/// Builds a family from in-memory records (validated as for parsing).
IngestedFamily make_family(std::vector<RecordData> data);

/// Canonical serialization: records in family order, coefficients by record
/// then ascending prime, shortest round-trip numbers, LF endings.
void write_family(const IngestedFamily& family, std::ostream& out);
std::string write_family(const IngestedFamily& family);

}  // namespace murmur::families
