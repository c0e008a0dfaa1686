#include "rieszkit/riesz.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rieszkit/error.hpp"
#include "rieszkit/gamma.hpp"

namespace rieszkit {

double riesz_prefactor(double alpha) {
  if (!(alpha > 0.0 && alpha < 2.0) || alpha == 1.0) {
    std::ostringstream msg;
    msg << "Riesz operator: alpha=" << alpha << " not in (0,1) U (1,2)";
    throw DomainError(msg.str());
  }
  return -1.0 / (2.0 * std::cos(std::numbers::pi * alpha / 2.0));
}

GridFunction riesz_apply(const CoefficientTable& table, const GridFunction& f) {
  const double pref = riesz_prefactor(table.alpha());
  const int M = f.grid.M();
  if (static_cast<int>(f.values.size()) != M + 1) throw DomainError("riesz_apply: value count does not match grid");
  if (static_cast<int>(table.length()) < M) {
    std::ostringstream msg;
    msg << "riesz_apply: table length " << table.length() << " shorter than M=" << M;
    throw DomainError(msg.str());
  }
  const double scale = pref / std::pow(f.grid.h(), table.alpha());
  GridFunction out{f.grid, std::vector<double>(static_cast<std::size_t>(M) + 1, 0.0)};
  for (int j = 1; j < M; ++j) {
    double s = 0.0;
    for (int l = 0; l <= j; ++l) s += table[l] * f.values[j - l];
    for (int l = 0; l <= M - j; ++l) s += table[l] * f.values[j + l];
    out.values[j] = scale * s;
  }
  return out;
}

double riesz_apply_at(const CoefficientTable& table, const std::function<double(double)>& f,
                      double a, double b, double h, double x) {
  const double pref = riesz_prefactor(table.alpha());
  const double eps = 1e-12 * (b - a);
  double s = 0.0;
  for (std::size_t l = 0;; ++l) {
    const double left = x - l * h;
    const double right = x + l * h;
    const bool in_left = left >= a - eps;
    const bool in_right = right <= b + eps;
    if (!in_left && !in_right) break;
    if (l > table.length()) throw DomainError("riesz_apply_at: coefficient table too short for the domain");
    if (in_left) s += table[l] * f(left);
    if (in_right) s += table[l] * f(right);
  }
  return pref / std::pow(h, table.alpha()) * s;
}

double analytic_riesz_fp(int p, double alpha, double x) {
  if (p < 2 || p > 6) throw DomainError("analytic_riesz_fp: p outside 2..6");
  if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("analytic_riesz_fp: alpha outside (0,1)");
  if (x < 0.0 || x > 1.0) throw DomainError("analytic_riesz_fp: x outside [0,1]");
  auto fact = [](int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  double s = 0.0;
  for (int l = 0; l <= p; ++l) {
    const double e = p + l - alpha;
    const double c = fact(p) * fact(p + l) / (fact(l) * fact(p - l) * gamma_real(p + l + 1 - alpha));
    const double term = c * (std::pow(x, e) + std::pow(1.0 - x, e));
    s += (l % 2 == 0) ? term : -term;
  }
  return riesz_prefactor(alpha) * s;
}

std::string_view to_string(Example1Metric m) {
  return m == Example1Metric::midpoint ? "midpoint-abs" : "interior-max-abs";
}

ConvergenceReport example1_convergence(int p, double alpha, const std::vector<int>& M_list,
                                       Example1Metric metric) {
  if (p < 2 || p > 6) throw DomainError("example1_convergence: p outside 2..6");
  ConvergenceReport rep;
  rep.method = "p" + std::to_string(p);
  rep.problem = "example1";
  rep.alpha = alpha;
  rep.norm = std::string(to_string(metric));
  const auto f = [p](double y) { return (y < 0.0 || y > 1.0) ? 0.0 : std::pow(y, p) * std::pow(1.0 - y, p); };
  for (int M : M_list) {
    if (M < 2) throw DomainError("example1_convergence: M must be >= 2");
    const CoefficientTable table = expand_generating_function(p, alpha, M + 1);
    const UniformGrid grid(0.0, 1.0, M);
    double err = 0.0;
    if (metric == Example1Metric::midpoint) {
      err = std::abs(riesz_apply_at(table, f, 0.0, 1.0, grid.h(), 0.5) - analytic_riesz_fp(p, alpha, 0.5));
    } else {
      const GridFunction approx = riesz_apply(table, GridFunction::sample(grid, f));
      for (int j = 1; j < M; ++j)
        err = std::max(err, std::abs(approx.values[j] - analytic_riesz_fp(p, alpha, grid.x(j))));
    }
    ConvergenceRow row;
    row.M = M;
    row.h = grid.h();
    row.error = err;
    rep.rows.push_back(row);
  }
  fill_orders(rep);
  return rep;
}

}  // namespace rieszkit
