// Explicit nested-sum weights for p = 2..6.
//
// For p >= 3 every formula has the shape
//   w_{p,l} = g0^alpha * sum_{l1=0}^{l} sum_{l2} K_p(l1, l2) w_{1,l-l1} w_{1,l1-l2}
// where K_p collects the deeper sums (l3, l4, l5) together with the rational powers and
// factorial ratios. K_p does not depend on alpha or l, so it is built once per p and grown
// on demand. The outer contraction alternates in sign and cancels heavily, hence quad
// precision throughout.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <mutex>
#include <sstream>
#include <vector>

#include "rieszkit/coefficients.hpp"
#include "rieszkit/error.hpp"

namespace rieszkit {

namespace {

using quad = boost::multiprecision::cpp_bin_float_quad;

quad ratio(int n, int d) { return quad(n) / quad(d); }

class PowerTable {
 public:
  PowerTable(quad base) : base_(std::move(base)), pow_{quad(1)} {}
  quad operator()(int n) {
    while (static_cast<int>(pow_.size()) <= n) pow_.push_back(pow_.back() * base_);
    return pow_[n];
  }

 private:
  quad base_;
  std::vector<quad> pow_;
};

class Factorials {
 public:
  quad operator()(int n) {
    while (static_cast<int>(f_.size()) <= n) f_.push_back(f_.back() * quad(static_cast<int>(f_.size())));
    return f_[n];
  }

 private:
  std::vector<quad> f_{quad(1)};
};

// K_p(l1, l2) for l1 = 0..rows-1, stored row by row; each row has l1+1 slots.
class InnerSums {
 public:
  explicit InnerSums(int p) : p_(p) {}

  // Returns a copy of the first n rows, extending the cache first if needed.
  std::vector<std::vector<quad>> rows(int n) {
    std::lock_guard<std::mutex> lock(mu_);
    while (static_cast<int>(k_.size()) < n) k_.push_back(build_row(static_cast<int>(k_.size())));
    return {k_.begin(), k_.begin() + n};
  }

 private:
  std::vector<quad> build_row(int l1) {
    std::vector<quad> row(static_cast<std::size_t>(l1) + 1, quad(0));
    for (int l2 = 0; l2 <= l1; ++l2) row[l2] = entry(l1, l2);
    return row;
  }

  quad entry(int l1, int l2) {
    Factorials& F = fact_;
    quad s = 0;
    switch (p_) {
      case 3:
        if (2 * l2 > l1) return 0;
        s = r1_(l1 - l2) * r2_(l2) * F(l1 - l2) / (F(l2) * F(l1 - 2 * l2));
        break;
      case 4:
        if (3 * l2 > 2 * l1) return 0;
        for (int l3 = std::max(0, 2 * l2 - l1); 2 * l3 <= l2; ++l3)
          s += r1_(l1 - l2) * r2_(l2 - l3) * r3_(l3) * F(l1 - l2) /
               (F(l3) * F(l2 - 2 * l3) * F(l1 + l3 - 2 * l2));
        break;
      case 5:
        if (4 * l2 > 3 * l1) return 0;
        for (int l3 = std::max(0, 2 * l2 - l1); 3 * l3 <= 2 * l2; ++l3)
          for (int l4 = std::max(0, 2 * l3 - l2); 2 * l4 <= l3; ++l4)
            s += r1_(l1 - l2) * r2_(l2 - l3) * r3_(l3 - l4) * r4_(l4) * F(l1 - l2) /
                 (F(l4) * F(l3 - 2 * l4) * F(l1 + l3 - 2 * l2) * F(l2 + l4 - 2 * l3));
        break;
      case 6:
        if (5 * l2 > 4 * l1) return 0;
        for (int l3 = std::max(0, 2 * l2 - l1); 4 * l3 <= 3 * l2; ++l3)
          for (int l4 = std::max(0, 2 * l3 - l2); 3 * l4 <= 2 * l3; ++l4)
            for (int l5 = std::max(0, 2 * l4 - l3); 2 * l5 <= l4; ++l5)
              s += r1_(l1 - l2) * r2_(l2 - l3) * r3_(l3 - l4) * r4_(l4 - l5) * r5_(l5) *
                   F(l1 - l2) /
                   (F(l5) * F(l4 - 2 * l5) * F(l1 + l3 - 2 * l2) * F(l2 + l4 - 2 * l3) *
                    F(l3 + l5 - 2 * l4));
        break;
      default:
        break;
    }
    return (l2 % 2 == 0) ? s : quad(-s);
  }

  static quad base(int p, int i) {
    // Ratios that appear as geometric factors, per order.
    switch (p) {
      case 3: return i == 1 ? ratio(7, 11) : ratio(2, 7);
      case 4: return i == 1 ? ratio(23, 25) : i == 2 ? ratio(13, 23) : ratio(3, 13);
      case 5:
        return i == 1 ? ratio(163, 137) : i == 2 ? ratio(137, 163) : i == 3 ? ratio(63, 137) : ratio(4, 21);
      case 6:
        return i == 1 ? ratio(213, 147)
             : i == 2 ? ratio(237, 213)
             : i == 3 ? ratio(163, 237)
             : i == 4 ? ratio(62, 163)
                      : ratio(5, 31);
      default: return quad(0);
    }
  }

  int p_;
  std::mutex mu_;
  std::vector<std::vector<quad>> k_;
  Factorials fact_;
  PowerTable r1_{base(p_, 1)}, r2_{base(p_, 2)}, r3_{base(p_, 3)}, r4_{base(p_, 4)}, r5_{base(p_, 5)};
};

InnerSums& inner_sums(int p) {
  static InnerSums k3(3), k4(4), k5(5), k6(6);
  switch (p) {
    case 3: return k3;
    case 4: return k4;
    case 5: return k5;
    default: return k6;
  }
}

std::vector<quad> first_order_quad(double alpha, int L) {
  std::vector<quad> w(static_cast<std::size_t>(L) + 1);
  w[0] = 1;
  const quad a1 = quad(alpha) + 1;
  for (int j = 1; j <= L; ++j) w[j] = (1 - a1 / j) * w[j - 1];
  return w;
}

}  // namespace

std::vector<double> closed_form_coeffs(int p, double alpha, int L) {
  if (p < 2 || p > 6) {
    std::ostringstream msg;
    msg << "closed_form_coeff: unsupported order p=" << p << " (expected 2..6)";
    throw DomainError(msg.str());
  }
  if (!(alpha > 0.0 && alpha < 2.0)) throw DomainError("closed_form_coeff: alpha outside (0, 2)");
  if (L < 0) throw DomainError("closed_form_coeff: negative index");

  const std::vector<quad> v = first_order_quad(alpha, L);
  const GeneratorPolynomial g = generator_polynomial(p);
  const double scale = std::pow(g.coeffs[0].value(), alpha);
  std::vector<double> out(static_cast<std::size_t>(L) + 1);

  if (p == 2) {
    PowerTable third(ratio(1, 3));
    for (int l = 0; l <= L; ++l) {
      quad s = 0;
      for (int k = 0; k <= l; ++k) s += third(k) * v[k] * v[l - k];
      out[l] = scale * static_cast<double>(s);
    }
    return out;
  }

  const auto K = inner_sums(p).rows(L + 1);
  for (int l = 0; l <= L; ++l) {
    quad s = 0;
    for (int l1 = 0; l1 <= l; ++l1) {
      quad inner = 0;
      for (int l2 = 0; l2 <= l1; ++l2) inner += K[l1][l2] * v[l1 - l2];
      s += inner * v[l - l1];
    }
    out[l] = scale * static_cast<double>(s);
  }
  return out;
}

double closed_form_coeff(int p, double alpha, int l) {
  return closed_form_coeffs(p, alpha, l).back();
}

}  // namespace rieszkit
