#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_map>

#include "murmur/error.hpp"
#include "murmur/families.hpp"

namespace murmur::families {

namespace {

constexpr std::string_view kMagic = "#murmur-family v1";
constexpr std::string_view kRecordHeader = "label,conductor,root_number";
constexpr std::string_view kCoefficientHeader = "label,p,ap";

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

template <class T>
bool parse_number(std::string_view text, T& value) {
  if (text.empty()) return false;
  if (text.front() == '+') text.remove_prefix(1);
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  return ec == std::errc() && ptr == end;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return false;
  }
  return true;
}

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

void check_record(const RecordData& r, const std::string& where) {
  if (r.label.empty()) throw ValidationError(where + "empty label");
  if (r.label.find_first_of(",\r\n") != std::string::npos) {
    throw ValidationError(where + "label '" + r.label + "' contains a separator");
  }
  if (r.root_number != 1 && r.root_number != -1) {
    throw ValidationError(where + "record '" + r.label + "' has root number " +
                          std::to_string(r.root_number));
  }
  if (!std::isfinite(r.conductor) || r.conductor < 1.0) {
    throw ValidationError(where + "record '" + r.label +
                          "' has conductor below 1");
  }
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line) + ": "; }

}  // namespace

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string normalize_line_endings(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r') {
      out.push_back('\n');
      if (i + 1 < text.size() && text[i + 1] == '\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

IngestedFamily make_family(std::vector<RecordData> data) {
  std::unordered_map<std::string, std::size_t> seen;
  std::uint64_t coverage = 0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    check_record(data[i], "");
    if (!seen.emplace(data[i].label, i).second) {
      throw ValidationError("duplicate label '" + data[i].label + "'");
    }
    for (const auto& [p, ap] : data[i].ap) {
      if (!is_prime(p)) {
        throw ValidationError("record '" + data[i].label + "': " +
                              std::to_string(p) + " is not prime");
      }
      if (!std::isfinite(ap)) {
        throw ValidationError("record '" + data[i].label +
                              "': non-finite coefficient");
      }
      coverage = std::max(coverage, p);
    }
  }

  IngestedFamily family;
  auto shared = std::make_shared<const std::vector<RecordData>>(std::move(data));
  family.data = shared;
  family.prime_coverage = coverage;
  for (std::size_t i = 0; i < shared->size(); ++i) {
    const auto& r = (*shared)[i];
    frame::FamilyRecord rec;
    rec.label = r.label;
    rec.conductor = r.conductor;
    rec.root_number = r.root_number;
    rec.raw = [shared, i](std::uint64_t p) {
      const auto& d = (*shared)[i];
      const auto it = d.ap.find(p);
      if (it == d.ap.end()) throw CoverageError(d.label, p);
      return it->second;
    };
    rec.lambda = [raw = rec.raw](std::uint64_t p) {
      return raw(p) / std::sqrt(static_cast<double>(p));
    };
    family.records.push_back(std::move(rec));
  }
  return family;
}

IngestedFamily parse_family(std::string_view text) {
  const std::string normalized = normalize_line_endings(text);
  std::vector<std::string_view> lines;
  {
    std::string_view rest = normalized;
    while (!rest.empty()) {
      const auto nl = rest.find('\n');
      lines.push_back(rest.substr(0, nl));
      if (nl == std::string_view::npos) break;
      rest.remove_prefix(nl + 1);
    }
  }

  if (lines.empty() || lines[0] != kMagic) {
    throw ParseError(1, "expected '" + std::string(kMagic) + "'");
  }
  if (lines.size() < 2 || lines[1] != kRecordHeader) {
    throw ParseError(2, "expected '" + std::string(kRecordHeader) + "'");
  }

  std::vector<RecordData> data;
  std::unordered_map<std::string, std::size_t> index;
  std::size_t i = 2;
  for (; i < lines.size() && !trim(lines[i]).empty(); ++i) {
    const std::size_t line = i + 1;
    const auto f = split_fields(lines[i]);
    if (f.size() != 3) throw ParseError(line, "expected 3 fields");
    RecordData r;
    r.label = std::string(f[0]);
    if (!parse_number(f[1], r.conductor)) throw ParseError(line, "bad conductor");
    if (!parse_number(f[2], r.root_number)) throw ParseError(line, "bad root number");
    check_record(r, at_line(line));
    if (!index.emplace(r.label, data.size()).second) {
      throw ValidationError(at_line(line) + "duplicate label '" + r.label + "'");
    }
    data.push_back(std::move(r));
  }

  while (i < lines.size() && trim(lines[i]).empty()) ++i;
  if (i < lines.size()) {
    if (lines[i] != kCoefficientHeader) {
      throw ParseError(i + 1, "expected '" + std::string(kCoefficientHeader) + "'");
    }
    for (++i; i < lines.size(); ++i) {
      const std::size_t line = i + 1;
      if (trim(lines[i]).empty()) continue;
      const auto f = split_fields(lines[i]);
      if (f.size() != 3) throw ParseError(line, "expected 3 fields");
      const auto it = index.find(std::string(f[0]));
      if (it == index.end()) {
        throw ValidationError(at_line(line) + "coefficient for unknown label '" +
                              std::string(f[0]) + "'");
      }
      std::uint64_t p = 0;
      double ap = 0.0;
      if (!parse_number(f[1], p)) throw ParseError(line, "bad prime");
      if (!parse_number(f[2], ap)) throw ParseError(line, "bad coefficient");
      if (!is_prime(p)) {
        throw ValidationError(at_line(line) + std::to_string(p) + " is not prime");
      }
      auto& rec = data[it->second];
      if (!rec.ap.emplace(p, ap).second) {
        throw ValidationError(at_line(line) + "duplicate coefficient for '" +
                              rec.label + "' at p=" + std::to_string(p));
      }
    }
  }

  auto family = make_family(std::move(data));
  family.source_digest = fnv1a64(normalized);
  return family;
}

IngestedFamily ingest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path, "read failed");
  return parse_family(buffer.str());
}

void write_family(const IngestedFamily& family, std::ostream& out) {
  out << kMagic << '\n' << kRecordHeader << '\n';
  const auto& data = family.data ? *family.data : std::vector<RecordData>{};
  for (const auto& r : data) {
    out << r.label << ',' << shortest(r.conductor) << ',' << r.root_number << '\n';
  }
  out << '\n' << kCoefficientHeader << '\n';
  for (const auto& r : data) {
    for (const auto& [p, ap] : r.ap) {
      out << r.label << ',' << p << ',' << shortest(ap) << '\n';
    }
  }
}

std::string write_family(const IngestedFamily& family) {
  std::ostringstream out;
  write_family(family, out);
  return out.str();
}

}  // namespace murmur::families
