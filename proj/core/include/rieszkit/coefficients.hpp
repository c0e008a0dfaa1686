#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rieszkit {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Degree-p polynomial g_0 + g_1 z + ... + g_p z^p whose alpha-th power generates the weights.
struct GeneratorPolynomial {
  int order = 0;
  std::vector<Rational> coeffs;
};

// Weights w_0..w_L for one (p, alpha). Immutable once built.
class CoefficientTable {
 public:
  CoefficientTable(int p, double alpha, std::vector<double> values);

  int p() const { return p_; }
  double alpha() const { return alpha_; }
  // Largest index held (L); size() == length() + 1.
  std::size_t length() const { return values_.size() - 1; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t l) const { return values_[l]; }
  const std::vector<double>& values() const { return values_; }

 private:
  int p_;
  double alpha_;
  std::vector<double> values_;
};

// (-1)^j binom(alpha, j) by the multiplicative recurrence.
double first_order_coeff(double alpha, int j);

// All first-order weights w_{1,0..L} in one pass.
std::vector<double> first_order_coeffs(double alpha, int L);

GeneratorPolynomial generator_polynomial(int p);

// Taylor coefficients of (sum g_i z^i)^alpha via the Miller power-of-series recurrence.
CoefficientTable expand_generating_function(int p, double alpha, int L);

// Explicit multinomial nested-sum expression, p = 2..6.
// Accumulated in 113-bit binary floating point: the alternating sums for p >= 4 cancel
// far below double resolution once l grows past ~30.
double closed_form_coeff(int p, double alpha, int l);

// Same route for every index 0..L at once (shares the alpha-independent inner sums).
std::vector<double> closed_form_coeffs(int p, double alpha, int L);

}  // namespace rieszkit
