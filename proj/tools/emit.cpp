#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include "cli.hpp"

namespace murmur::cli {

namespace {

constexpr double kWidth = 1200.0;
constexpr double kHeight = 600.0;
constexpr double kMargin = 60.0;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b"};

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(path, "cannot open for writing");
  return out;
}

void finish(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError(path, "write failed");
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  std::string s(buf, ptr);
  if (std::isfinite(v) && s.find_first_of(".e") == std::string::npos) s += ".0";
  return s;
}

Table Table::from_series(const frame::MurmurationSeries& series) {
  Table t;
  std::vector<std::uint64_t> counts;
  for (const auto& s : series.samples) {
    t.y.push_back(s.y);
    t.value.push_back(s.value);
    counts.push_back(s.count);
  }
  t.count = std::move(counts);
  return t;
}

void emit_csv(const Table& table, std::ostream& out) {
  for (const auto& a : table.atoms) {
    out << "#atom " << format_number(a.location) << ' ' << format_number(a.mass)
        << '\n';
  }
  out << (table.count ? "y,value,count\n" : "y,value\n");
  for (std::size_t i = 0; i < table.rows(); ++i) {
    out << format_number(table.y[i]) << ',' << format_number(table.value[i]);
    if (table.count) out << ',' << (*table.count)[i];
    out << '\n';
  }
}

void emit_csv(const Table& table, const std::string& path) {
  if (table.rows() == 0 && table.atoms.empty()) {
    throw DomainError("refusing to write an empty table to " + path);
  }
  auto out = open_output(path);
  emit_csv(table, out);
  finish(out, path);
}

void emit_svg(std::span<const Overlay> overlays,
              std::span<const densities::Atom> atoms, std::ostream& out) {
  double x0 = std::numeric_limits<double>::infinity();
  double x1 = -x0;
  double y0 = 0.0;
  double y1 = 0.0;
  for (const auto& o : overlays) {
    for (double x : o.x) x0 = std::min(x0, x), x1 = std::max(x1, x);
    for (double y : o.y) y0 = std::min(y0, y), y1 = std::max(y1, y);
  }
  for (const auto& a : atoms) {
    x0 = std::min(x0, a.location);
    x1 = std::max(x1, a.location);
    y0 = std::min(y0, a.mass);
    y1 = std::max(y1, a.mass);
  }
  if (!(x0 < x1)) x0 -= 0.5, x1 += 0.5;
  if (!(y0 < y1)) y0 -= 0.5, y1 += 0.5;

  const auto px = [&](double x) {
    return kMargin + (x - x0) / (x1 - x0) * (kWidth - 2 * kMargin);
  };
  const auto py = [&](double y) {
    return kHeight - kMargin - (y - y0) / (y1 - y0) * (kHeight - 2 * kMargin);
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"1200\" "
         "height=\"600\" viewBox=\"0 0 1200 600\">\n";
  out << "<rect width=\"1200\" height=\"600\" fill=\"white\"/>\n";
  out << "<g stroke=\"black\" stroke-width=\"1\">\n";
  out << "<line x1=\"" << fixed2(kMargin) << "\" y1=\"" << fixed2(py(0.0))
      << "\" x2=\"" << fixed2(kWidth - kMargin) << "\" y2=\"" << fixed2(py(0.0))
      << "\"/>\n";
  out << "<line x1=\"" << fixed2(kMargin) << "\" y1=\"" << fixed2(kMargin)
      << "\" x2=\"" << fixed2(kMargin) << "\" y2=\"" << fixed2(kHeight - kMargin)
      << "\"/>\n</g>\n";
  out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
  out << "<text x=\"" << fixed2(kMargin) << "\" y=\"" << fixed2(kHeight - 20)
      << "\">" << format_number(x0) << "</text>\n";
  out << "<text x=\"" << fixed2(kWidth - kMargin) << "\" y=\""
      << fixed2(kHeight - 20) << "\" text-anchor=\"end\">" << format_number(x1)
      << "</text>\n";
  out << "<text x=\"5\" y=\"" << fixed2(kMargin) << "\">" << format_number(y1)
      << "</text>\n";
  out << "<text x=\"5\" y=\"" << fixed2(kHeight - kMargin) << "\">"
      << format_number(y0) << "</text>\n";
  for (std::size_t i = 0; i < overlays.size(); ++i) {
    out << "<text x=\"" << fixed2(kWidth - kMargin - 200) << "\" y=\""
        << fixed2(kMargin + 16.0 * static_cast<double>(i)) << "\" fill=\""
        << kColors[i % std::size(kColors)] << "\">" << overlays[i].label
        << "</text>\n";
  }
  out << "</g>\n";

  for (std::size_t i = 0; i < overlays.size(); ++i) {
    const auto& o = overlays[i];
    out << "<polyline fill=\"none\" stroke=\"" << kColors[i % std::size(kColors)]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t j = 0; j < o.x.size(); ++j) {
      if (j) out << ' ';
      out << fixed2(px(o.x[j])) << ',' << fixed2(py(o.y[j]));
    }
    out << "\"/>\n";
  }
  if (!atoms.empty()) {
    out << "<g stroke=\"#444444\" stroke-width=\"1\">\n";
    for (const auto& a : atoms) {
      out << "<line x1=\"" << fixed2(px(a.location)) << "\" y1=\""
          << fixed2(py(0.0)) << "\" x2=\"" << fixed2(px(a.location))
          << "\" y2=\"" << fixed2(py(a.mass)) << "\"/>\n";
    }
    out << "</g>\n";
  }
  out << "</svg>\n";
}

void emit_svg(std::span<const Overlay> overlays,
              std::span<const densities::Atom> atoms, const std::string& path) {
  auto out = open_output(path);
  emit_svg(overlays, atoms, out);
  finish(out, path);
}

}  // namespace murmur::cli
