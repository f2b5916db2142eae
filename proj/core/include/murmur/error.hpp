#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace murmur {

/// Coarse classification of every error the library raises. The CLI maps
/// each category onto exactly one process exit code.
enum class ErrorCategory {
  domain,    // arguments outside a documented range
  size,      // request would overflow the table/integer width
  data,      // malformed or inconsistent input files
  coverage,  // coefficient lookup outside the available data
  accuracy,  // a certified tolerance could not be met
  window,    // an average over an empty window
  io,        // filesystem failures
};

std::string_view to_string(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCategory::domain, what) {}
};

class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what)
      : Error(ErrorCategory::size, what) {}
};

class DataError : public Error {
 public:
  explicit DataError(const std::string& what)
      : Error(ErrorCategory::data, what) {}
};

/// Malformed input row; carries the 1-based line number.
class ParseError : public DataError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public DataError {
 public:
  using DataError::DataError;
};

/// A coefficient was requested that the data source does not hold.
class CoverageError : public Error {
 public:
  CoverageError(const std::string& label, std::uint64_t prime)
      : Error(ErrorCategory::coverage,
              "no coefficient for prime " + std::to_string(prime) +
                  (label.empty() ? std::string() : " in record '" + label + "'")),
        prime_(prime) {}

  std::uint64_t prime() const noexcept { return prime_; }

 private:
  std::uint64_t prime_;
};

/// Raised when a tolerance cannot be certified. `best_estimate` holds the
/// value that was reached anyway.
class AccuracyError : public Error {
 public:
  AccuracyError(const std::string& what, double best_estimate,
                double error_estimate)
      : Error(ErrorCategory::accuracy, what),
        best_estimate_(best_estimate),
        error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

class WindowError : public Error {
 public:
  explicit WindowError(const std::string& what)
      : Error(ErrorCategory::window, what) {}
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what)
      : Error(ErrorCategory::io, path + ": " + what), path_(path) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace murmur
