#include "rieszkit/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rieszkit/coefficients.hpp"
#include "rieszkit/error.hpp"

namespace rieszkit {

namespace {

constexpr double kPi = std::numbers::pi;

// Coefficients of Q = W_p / (1 - z): partial sums of g.
std::vector<double> quotient_coeffs(int p) {
  const GeneratorPolynomial g = generator_polynomial(p);
  std::vector<double> q(static_cast<std::size_t>(p));
  double acc = 0.0;
  for (int k = 0; k < p; ++k) {
    acc += g.coeffs[k].value();
    q[k] = acc;
  }
  return q;
}

std::complex<double> horner(const std::vector<double>& c, std::complex<double> z) {
  std::complex<double> s = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) s = s * z + *it;
  return s;
}

// |arg W_p(e^{i theta})| along the continuous branch, theta in (0, pi].
double continuous_arg(const std::vector<double>& q, double theta) {
  const std::complex<double> z = std::polar(1.0, theta);
  return std::abs((theta - kPi) / 2.0 + std::arg(horner(q, z)));
}

}  // namespace

std::complex<double> symbol_complex(int p, double alpha, double theta) {
  if (p < 1 || p > 6) throw DomainError("symbol_value: unsupported order");
  const std::complex<double> z = std::polar(1.0, theta);
  const std::complex<double> one_minus_z = 1.0 - z;
  if (std::abs(one_minus_z) == 0.0) return 0.0;
  const std::vector<double> q = quotient_coeffs(p);
  return std::pow(one_minus_z, alpha) * std::pow(horner(q, z), alpha);
}

double symbol_value(int p, double alpha, double theta) {
  return symbol_complex(p, alpha, theta).real();
}

SymbolCheck check_symbol_nonnegativity(int p, double alpha, int grid_size) {
  if (grid_size < 1024) throw DomainError("check_symbol_nonnegativity: grid_size must be >= 1024");
  SymbolCheck out;
  out.min_value = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= grid_size; ++k) {
    const double theta = -kPi + 2.0 * kPi * k / grid_size;
    const double v = symbol_value(p, alpha, theta);
    if (v < out.min_value) {
      out.min_value = v;
      out.argmin_theta = theta;
    }
  }
  out.nonnegative = out.min_value >= -kSymbolTolerance;
  return out;
}

double alpha_threshold_p4() {
  return kPi / (kPi - std::acos(0.2) + 2.0 * std::atan(191.0 * std::sqrt(6.0) / 317.0));
}

double sufficient_alpha_threshold(int p) {
  if (p < 1 || p > 6) throw DomainError("sufficient_alpha_threshold: unsupported order");
  const std::vector<double> q = quotient_coeffs(p);
  const int n = 20000;
  int best = n;
  double best_val = continuous_arg(q, kPi);
  for (int k = 1; k < n; ++k) {
    const double v = continuous_arg(q, kPi * k / n);
    if (v > best_val) {
      best_val = v;
      best = k;
    }
  }
  // Golden-section refinement on the bracketing cell.
  double lo = kPi * std::max(best - 1, 1) / n;
  double hi = kPi * std::min(best + 1, n) / n;
  const double r = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double m1 = hi - r * (hi - lo);
    const double m2 = lo + r * (hi - lo);
    if (continuous_arg(q, m1) < continuous_arg(q, m2)) lo = m1; else hi = m2;
  }
  best_val = std::max(best_val, continuous_arg(q, 0.5 * (lo + hi)));
  // Near theta = 0 the supremum pi/2 is approached but not attained.
  best_val = std::max(best_val, kPi / 2.0);
  return (kPi / 2.0) / best_val;
}

MonotonicityResult monotonicity_scan(int p, double alpha, int L) {
  if (p < 2 || p > 6) throw DomainError("monotonicity_scan: unsupported order");
  if (L < 200) throw DomainError("monotonicity_scan: L must be >= 200");
  const CoefficientTable t = expand_generating_function(p, alpha, L);
  MonotonicityResult out;
  out.direction = alpha < 1.0 ? TailDirection::nondecreasing : TailDirection::nonincreasing;
  auto ok = [&](int l) {
    return out.direction == TailDirection::nondecreasing ? t[l] <= t[l + 1] : t[l] >= t[l + 1];
  };
  int start = L;
  while (start > 0 && ok(start - 1)) --start;
  if (start < L) out.tail_start = start;
  return out;
}

std::optional<int> claimed_tail_start(int p, double alpha) {
  const bool low = alpha < 1.0;
  switch (p) {
    case 2: return low ? 4 : 5;
    case 3: return low ? 4 : 7;
    case 4: return low ? 7 : 12;
    case 5: return low ? 12 : 16;
    default: return std::nullopt;
  }
}

bool check_exponential_sandwich(int n) {
  if (n < 1) return false;
  for (int i = 1; i <= n; ++i) {
    const double x = static_cast<double>(i) / (n + 1);  // open interval (0, 1)
    if (!(1.0 - x < std::exp(-x))) return false;
  }
  for (int i = 1; i <= n; ++i) {
    const double x = 0.7968 * i / n;  // half-open (0, 0.7968]
    if (!(1.0 - x > std::exp(-2.0 * x))) return false;
  }
  return true;
}

}  // namespace rieszkit
