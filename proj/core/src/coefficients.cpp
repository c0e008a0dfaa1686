#include "rieszkit/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "rieszkit/error.hpp"

namespace rieszkit {

namespace {

void require_order(int p, int lo, int hi, const char* who) {
  if (p < lo || p > hi) {
    std::ostringstream msg;
    msg << who << ": unsupported order p=" << p << " (expected " << lo << ".." << hi << ")";
    throw DomainError(msg.str());
  }
}

void require_alpha(double alpha, const char* who) {
  if (!(alpha > 0.0 && alpha < 2.0)) {
    std::ostringstream msg;
    msg << who << ": alpha=" << alpha << " outside (0, 2)";
    throw DomainError(msg.str());
  }
}

}  // namespace

CoefficientTable::CoefficientTable(int p, double alpha, std::vector<double> values)
    : p_(p), alpha_(alpha), values_(std::move(values)) {
  if (values_.empty()) throw DomainError("CoefficientTable: empty value list");
}

double first_order_coeff(double alpha, int j) {
  if (j < 0) throw DomainError("first_order_coeff: negative index");
  double w = 1.0;
  for (int i = 1; i <= j; ++i) w *= 1.0 - (alpha + 1.0) / i;
  return w;
}

std::vector<double> first_order_coeffs(double alpha, int L) {
  if (L < 0) throw DomainError("first_order_coeffs: negative length");
  std::vector<double> w(static_cast<std::size_t>(L) + 1);
  w[0] = 1.0;
  for (int j = 1; j <= L; ++j) w[j] = (1.0 - (alpha + 1.0) / j) * w[j - 1];
  return w;
}

GeneratorPolynomial generator_polynomial(int p) {
  require_order(p, 1, 6, "generator_polynomial");
  static const std::vector<Rational> table[6] = {
      {{1, 1}, {-1, 1}},
      {{3, 2}, {-2, 1}, {1, 2}},
      {{11, 6}, {-3, 1}, {3, 2}, {-1, 3}},
      {{25, 12}, {-4, 1}, {3, 1}, {-4, 3}, {1, 4}},
      {{137, 60}, {-5, 1}, {5, 1}, {-10, 3}, {5, 4}, {-1, 5}},
      {{147, 60}, {-6, 1}, {15, 2}, {-20, 3}, {15, 4}, {-6, 5}, {1, 6}},
  };
  return GeneratorPolynomial{p, table[p - 1]};
}

CoefficientTable expand_generating_function(int p, double alpha, int L) {
  require_order(p, 1, 6, "expand_generating_function");
  require_alpha(alpha, "expand_generating_function");
  if (L < 0) throw DomainError("expand_generating_function: negative length");

  const GeneratorPolynomial g = generator_polynomial(p);
  const double g0 = g.coeffs[0].value();
  std::vector<double> q(static_cast<std::size_t>(p) + 1);
  for (int k = 0; k <= p; ++k) q[k] = g.coeffs[k].value() / g0;

  // P = g0 (1 + q1 z + ...); n w_n = sum_k ((alpha+1) k - n) q_k w_{n-k}.
  std::vector<double> w(static_cast<std::size_t>(L) + 1, 0.0);
  w[0] = 1.0;
  for (int n = 1; n <= L; ++n) {
    double s = 0.0;
    const int kmax = std::min(p, n);
    for (int k = 1; k <= kmax; ++k) s += ((alpha + 1.0) * k - n) * q[k] * w[n - k];
    w[n] = s / n;
  }
  const double scale = std::pow(g0, alpha);
  for (double& v : w) v *= scale;
  return CoefficientTable(p, alpha, std::move(w));
}

}  // namespace rieszkit
