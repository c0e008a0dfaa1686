#include "rieszkit/problem.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rieszkit/error.hpp"
#include "rieszkit/gamma.hpp"

namespace rieszkit {

namespace {

// sum_k c_k Gamma(n+1+k)/Gamma(n+1+k-alpha) [x^{n+k-alpha} + (1-x)^{n+k-alpha}], c_k = (-1)^k C(n,k):
// the left plus right fractional derivatives of x^n (1-x)^n.
template <std::size_t K>
std::function<double(double)> two_sided_sum(int n, double alpha) {
  std::array<double, K> w{};
  double binom = 1.0;
  for (int k = 0; k < static_cast<int>(K); ++k) {
    if (k > 0) binom = binom * (n - k + 1) / k;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    w[k] = sign * binom * gamma_real(n + 1 + k) / gamma_real(n + 1 + k - alpha);
  }
  return [w, n, alpha](double x) {
    double s = 0.0;
    for (int k = 0; k < static_cast<int>(K); ++k) {
      const double e = n + k - alpha;
      s += w[k] * (std::pow(x, e) + std::pow(1.0 - x, e));
    }
    return s;
  };
}

ProblemSpec example2(double alpha) {
  ProblemSpec s;
  s.name = "example2";
  s.d1 = 1.0;
  s.d2 = 1.0;
  s.d_alpha = 1.0;
  s.alpha = alpha;
  const double half_sec = 0.5 / std::cos(std::numbers::pi * alpha / 2.0);
  const auto frac = two_sided_sum<7>(6, alpha);
  s.source = [half_sec, frac](double x, double t) {
    const double et = std::exp(t);
    const double x4 = std::pow(x * (1.0 - x), 4);
    const double poly = (((x + 10.0) * x - 149.0) * x + 138.0) * x - 30.0;
    return et * x4 * poly + half_sec * et * frac(x);
  };
  s.initial = [](double x) { return std::pow(x * (1.0 - x), 6); };
  s.exact = [](double x, double t) { return std::exp(t) * std::pow(x * (1.0 - x), 6); };
  return s;
}

ProblemSpec example3(double alpha) {
  ProblemSpec s;
  s.name = "example3";
  s.d1 = 2.0;
  s.d2 = 1.0;
  s.d_alpha = alpha * alpha;
  s.alpha = alpha;
  const double coef = alpha * alpha / 2.0 / std::cos(std::numbers::pi * alpha / 2.0);
  const auto frac = two_sided_sum<9>(8, alpha);
  s.source = [coef, frac](double x, double t) {
    const double x6 = std::pow(x * (1.0 - x), 6);
    const double ct = (x * x - 2.0 * x + 1.0) * x * x;  // x^4 - 2x^3 + x^2
    const double st = ((32.0 * x - 288.0) * x + 256.0) * x - 56.0;
    return x6 * (std::cos(t) * ct + std::sin(t) * st) + coef * std::sin(t) * frac(x);
  };
  s.initial = [](double) { return 0.0; };
  s.exact = [](double x, double t) { return std::sin(t) * std::pow(x * (1.0 - x), 8); };
  return s;
}

}  // namespace

void ProblemSpec::validate() const {
  auto fail = [this](const std::string& what) {
    throw DomainError("problem '" + name + "': " + what);
  };
  if (!(b > a)) fail("need b > a");
  if (!(T > 0.0)) fail("need T > 0");
  if (!(d2 > 0.0)) fail("d2 must be > 0 (the compact stencils divide by it)");
  if (d1 < 0.0) fail("d1 must be >= 0");
  if (d_alpha < 0.0) fail("d_alpha must be >= 0");
  if (!(alpha > 0.0 && alpha < 1.0)) fail("alpha must lie in (0, 1)");
  if (!source) fail("missing source function");
  if (!initial) fail("missing initial function");
}

const std::vector<std::string>& builtin_problem_names() {
  static const std::vector<std::string> names{"example2", "example3"};
  return names;
}

ProblemSpec builtin_problem(std::string_view name, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    std::ostringstream msg;
    msg << "builtin_problem: alpha=" << alpha << " outside (0, 1)";
    throw DomainError(msg.str());
  }
  if (name == "example2") return example2(alpha);
  if (name == "example3") return example3(alpha);
  throw DomainError("builtin_problem: unknown problem '" + std::string(name) + "'");
}

}  // namespace rieszkit
