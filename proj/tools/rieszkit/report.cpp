#include "rieszkit/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "rieszkit/convergence.hpp"
#include "rieszkit/error.hpp"

namespace rieszkit::cli {

void Table::add(std::vector<std::string> row) {
  if (row.size() != header.size()) throw std::logic_error("table row width does not match header");
  rows.push_back(std::move(row));
}

void write_csv(std::ostream& os, const Table& t) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
}

namespace {

bool numeric(const std::string& s) {
  if (s.empty()) return false;
  const char c = s[0];
  return (c >= '0' && c <= '9') || c == '-' || c == '+' || c == '.';
}

}  // namespace

void write_text(std::ostream& os, const Table& t) {
  std::vector<std::size_t> width(t.header.size());
  for (std::size_t i = 0; i < width.size(); ++i) width[i] = t.header[i].size();
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());

  // A column is right-aligned when every filled cell is a number ("-" marks a gap).
  std::vector<bool> right(width.size(), true);
  for (const auto& r : t.rows)
    for (std::size_t i = 0; i < r.size(); ++i)
      if (!r[i].empty() && r[i] != "-" && !numeric(r[i])) right[i] = false;

  auto line = [&](const std::vector<std::string>& cells, bool head) {
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const std::string pad(width[i] - cells[i].size(), ' ');
      if (i) out += "  ";
      out += (!head && right[i]) ? pad + cells[i] : cells[i] + pad;
    }
    while (!out.empty() && out.back() == ' ') out.pop_back();
    os << out << '\n';
  };
  line(t.header, true);
  std::size_t total = 0;
  for (auto w : width) total += w;
  total += width.empty() ? 0 : 2 * (width.size() - 1);
  os << std::string(total, '-') << '\n';
  for (const auto& r : t.rows) line(r, false);
}

std::string real_cell(double v) {
  if (!std::isfinite(v)) throw NumericalError("non-finite value in report");
  return format_real(v);
}

std::string real_cell(const std::optional<double>& v) { return v ? real_cell(*v) : std::string(); }

std::string sci_cell(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*e", digits, v);
  return buf;
}

std::string sci_cell(const std::optional<double>& v, int digits) { return v ? sci_cell(*v, digits) : "-"; }

std::string fixed_cell(const std::optional<double>& v, int digits) {
  if (!v) return "-";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, *v);
  return buf;
}

}  // namespace rieszkit::cli
