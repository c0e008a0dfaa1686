#include "rieszkit/convergence.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

#include "rieszkit/error.hpp"

namespace rieszkit {

namespace {

const char* kHeader = "method,problem,alpha,norm,M,N,h,tau,error,temporal_order,spatial_order";

std::string opt(const std::optional<double>& v) { return v ? format_real(*v) : std::string(); }

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

double parse_real(const std::string& s, int line) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) {
    std::ostringstream msg;
    msg << "convergence CSV line " << line << ": bad number '" << s << "'";
    throw DomainError(msg.str());
  }
  return v;
}

std::optional<double> parse_opt(const std::string& s, int line) {
  if (s.empty()) return std::nullopt;
  return parse_real(s, line);
}

}  // namespace

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.16e", v);
  return buf;
}

std::optional<double> observed_order(double e1, double e2, double s1, double s2) {
  if (!(e1 > 0.0) || !(e2 > 0.0) || s1 == s2 || !(s1 > 0.0) || !(s2 > 0.0)) return std::nullopt;
  return std::log(e1 / e2) / std::log(s1 / s2);
}

void fill_orders(ConvergenceReport& report) {
  auto& rows = report.rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    rows[i].temporal_order.reset();
    rows[i].spatial_order.reset();
    if (i == 0) continue;
    const auto& a = rows[i - 1];
    auto& b = rows[i];
    b.spatial_order = observed_order(a.error, b.error, a.h, b.h);
    if (a.tau && b.tau) b.temporal_order = observed_order(a.error, b.error, *a.tau, *b.tau);
  }
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceReport>& reports) {
  os << kHeader << '\n';
  for (const auto& r : reports) {
    for (const auto& row : r.rows) {
      os << r.method << ',' << r.problem << ',' << format_real(r.alpha) << ',' << r.norm << ',' << row.M << ','
         << row.N << ',' << format_real(row.h) << ',' << opt(row.tau) << ',' << format_real(row.error) << ','
         << opt(row.temporal_order) << ',' << opt(row.spatial_order) << '\n';
    }
  }
}

std::vector<ConvergenceReport> read_convergence_csv(std::istream& is) {
  std::vector<ConvergenceReport> out;
  std::string line;
  int n = 0;
  if (!std::getline(is, line)) throw DomainError("convergence CSV: empty input");
  ++n;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader) throw DomainError("convergence CSV line 1: unexpected header");
  while (std::getline(is, line)) {
    ++n;
    if (line.empty()) continue;
    const auto f = split(line);
    if (f.size() != 11) {
      std::ostringstream msg;
      msg << "convergence CSV line " << n << ": expected 11 fields, got " << f.size();
      throw DomainError(msg.str());
    }
    const double alpha = parse_real(f[2], n);
    if (out.empty() || out.back().method != f[0] || out.back().problem != f[1] || out.back().alpha != alpha ||
        out.back().norm != f[3]) {
      ConvergenceReport rep;
      rep.method = f[0];
      rep.problem = f[1];
      rep.alpha = alpha;
      rep.norm = f[3];
      out.push_back(rep);
    }
    ConvergenceRow row;
    row.M = static_cast<int>(parse_real(f[4], n));
    row.N = static_cast<int>(parse_real(f[5], n));
    row.h = parse_real(f[6], n);
    row.tau = parse_opt(f[7], n);
    row.error = parse_real(f[8], n);
    row.temporal_order = parse_opt(f[9], n);
    row.spatial_order = parse_opt(f[10], n);
    out.back().rows.push_back(row);
  }
  return out;
}

}  // namespace rieszkit
