#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "rieszkit/analysis.hpp"
#include "rieszkit/coefficients.hpp"
#include "rieszkit/error.hpp"

namespace rieszkit {

namespace {

constexpr double kPi = std::numbers::pi;
// pi^2/6 - 5/4
const double kExpConst = kPi * kPi / 6.0 - 1.25;

struct FamilyInfo {
  BoundFamily family;
  std::string_view tag;
  int min_l;
};

constexpr std::array<FamilyInfo, 8> kFamilies{{
    {BoundFamily::first_order_exp, "first-order-exp", 3},
    {BoundFamily::first_order_exp_tail, "first-order-exp-tail", 3},
    {BoundFamily::first_order_power, "first-order-power", 3},
    {BoundFamily::first_order_power_tail, "first-order-power-tail", 3},
    {BoundFamily::shifted_first_order, "shifted-first-order", 4},
    {BoundFamily::shifted_first_order_tail, "shifted-first-order-tail", 4},
    {BoundFamily::second_order, "second-order", 4},
    {BoundFamily::shifted_second_order, "shifted-second-order", 4},
}};

const FamilyInfo& info(BoundFamily f) {
  for (const auto& i : kFamilies)
    if (i.family == f) return i;
  throw DomainError("unknown bound family");
}

double upper_first(double a, int l) { return a * std::pow(2.0, a + 1) / std::pow(l + 1.0, a + 1); }
double upper_first_tail(double a, int l) { return 2.0 * std::pow(2.0 / l, a); }

// Truncated tail sum_{k=l}^{l+kTailTerms} |w_{1,k}^{(order)}| and the exact tail via
// partial sums of the binomial series: sum_{k<=n} (-1)^k C(b,k) = (-1)^n C(b-1,n).
struct Tail {
  double truncated;
  double exact;
};

Tail first_order_tail(double order, int l) {
  const std::vector<double> w = first_order_coeffs(order, l + kTailTerms);
  double s = 0.0;
  for (int k = static_cast<int>(w.size()) - 1; k >= l; --k) s += std::abs(w[k]);
  // Every w_k with k >= l has one sign (l >= 1 for 0 < order < 1, l >= 2 for 1 < order < 2),
  // so the tail of |w| equals minus the partial sum up to l-1.
  double exact = std::abs(first_order_coeff(order - 1.0, l - 1));
  return {s, exact};
}

double second_order_abs(double order, int l) {
  return std::abs(expand_generating_function(2, order, l)[l]);
}

}  // namespace

std::string_view to_string(BoundFamily f) { return info(f).tag; }

std::optional<BoundFamily> parse_bound_family(std::string_view tag) {
  for (const auto& i : kFamilies)
    if (i.tag == tag) return i.family;
  return std::nullopt;
}

const std::vector<BoundFamily>& all_bound_families() {
  static const std::vector<BoundFamily> all = [] {
    std::vector<BoundFamily> v;
    for (const auto& i : kFamilies) v.push_back(i.family);
    return v;
  }();
  return all;
}

int minimum_index(BoundFamily f) { return info(f).min_l; }

BoundCheckRecord evaluate_bounds(BoundFamily family, double a, int l) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("evaluate_bounds: alpha outside (0, 1)");
  if (l < minimum_index(family)) {
    std::ostringstream msg;
    msg << "evaluate_bounds: family " << to_string(family) << " needs l >= " << minimum_index(family);
    throw DomainError(msg.str());
  }
  BoundCheckRecord r;
  r.family = family;
  r.alpha = a;
  r.l = l;
  const double L = l;
  switch (family) {
    case BoundFamily::first_order_exp:
      r.lower = std::exp(-(a + 1) * (a + 1) * kExpConst) * a * (1 - a) * std::pow(2.0, a) / std::pow(L, a + 1);
      r.observed = std::abs(first_order_coeff(a, l));
      r.upper = upper_first(a, l);
      break;
    case BoundFamily::first_order_power:
      r.lower = a * (1 - a) / 2.0 * std::pow(2.0 / L, 2 * (a + 1));
      r.observed = std::abs(first_order_coeff(a, l));
      r.upper = upper_first(a, l);
      break;
    case BoundFamily::first_order_exp_tail:
    case BoundFamily::first_order_power_tail: {
      r.lower = family == BoundFamily::first_order_exp_tail
                    ? (1 - a) / 5.0 * std::pow(2.0 / L, a)
                    : a * (1 - a) / (2 * a + 1) * std::pow(2.0 / L, 2 * a + 1);
      const Tail t = first_order_tail(a, l);
      r.observed = t.truncated;
      r.remainder = t.exact - t.truncated;
      r.upper = upper_first_tail(a, l);
      break;
    }
    case BoundFamily::shifted_first_order:
      r.lower = (1 - a) * a * (1 + a) / 6.0 * std::pow(3.0 / L, 2 * (2 + a));
      r.observed = std::abs(first_order_coeff(1 + a, l));
      r.upper = a * (1 + a) / 2.0 * std::pow(3.0 / (L + 1), 2 + a);
      break;
    case BoundFamily::shifted_first_order_tail: {
      r.lower = (1 - a) * a * (1 + a) / (2 * (3 + 2 * a)) * std::pow(3.0 / L, 3 + 2 * a);
      const Tail t = first_order_tail(1 + a, l);
      r.observed = t.truncated;
      r.remainder = t.exact - t.truncated;
      r.upper = 1.5 * a * std::pow(3.0 / L, 1 + a);
      break;
    }
    case BoundFamily::second_order: {
      const double t = std::pow(1.0 / 3.0, L);
      const double t1 = std::pow(1.0 / 3.0, L - 1);
      const double s = std::pow(1.5, a);
      r.lower = s * ((1 + t) * a * (1 - a) / 2.0 * std::pow(2.0 / L, 2 * (1 + a)) -
                     (1 - t1) * a * a * std::pow(2.0, 2 * a + 1) / (1 + (a + 1) * L));
      r.observed = second_order_abs(a, l);
      r.upper = s * ((1 + t) * a * std::pow(2.0, a + 1) / std::pow(L + 1, a + 1) -
                     a * a * (1 - a) * (1 - a) * std::pow(4.0, 2 * a + 1) / 2.0 * (1 - t1) *
                         std::pow(2.0 / L, 4 * (a + 1)));
      break;
    }
    case BoundFamily::shifted_second_order: {
      const double t = std::pow(1.0 / 3.0, L);
      const double t1 = std::pow(1.0 / 3.0, L - 1);
      const double t3 = std::pow(1.0 / 3.0, L - 3);
      const double s = std::pow(1.5, 1 + a);
      r.lower = s * ((1 + t) * (1 - a) * a * (1 + a) / 6.0 * std::pow(3.0 / L, 2 * (2 + a)) +
                     (1 - a) * (1 - a) * a * a * (1 + a) * (1 + a) / 216.0 * (1 - t3) *
                         std::pow(6.0 / L, 4 * (2 + a)) -
                     a * (1 + a) * (1 + a) / 2.0 * (1.0 / 3.0 + t1) * std::pow(3.0 / L, 2 + a));
      r.observed = second_order_abs(1 + a, l);
      r.upper = s * ((1 + t) * a * (a + 1) * std::pow(3.0, a + 2) / (2.0 * std::pow(L + 1, a + 2)) +
                     (1 - t3) * a * a * (1 + a) * (1 + a) * std::pow(3.0, 2 * (2 + a)) /
                         (24.0 * (1 + (2 + a) * L)) -
                     (1 - a) * a * (1 + a) * (1 + a) / 6.0 * (1.0 / 3.0 + t1) *
                         std::pow(3.0 / (L - 1), 2 * (2 + a)));
      break;
    }
  }
  r.holds = r.lower < r.observed && r.observed < r.upper;
  r.holds_with_remainder = r.holds && r.observed + r.remainder < r.upper;
  return r;
}

LowerBoundComparison compare_lower_bounds(double a, int l) {
  if (!(a > 0.0 && a < 1.0)) throw DomainError("compare_lower_bounds: alpha outside (0, 1)");
  if (l < 3) throw DomainError("compare_lower_bounds: l must be >= 3");
  const double L = l;
  const double power = a * (1 - a) / 2.0 * std::pow(2.0 / L, 2 * (a + 1));
  const double expo = std::exp(-(a + 1) * (a + 1) * kExpConst) * a * (1 - a) * std::pow(2.0, a) / std::pow(L, a + 1);
  const double power_tail = a * (1 - a) / (2 * a + 1) * std::pow(2.0 / L, 2 * a + 1);
  const double expo_tail = (1 - a) / 5.0 * std::pow(2.0 / L, a);
  LowerBoundComparison c;
  c.pointwise_power_below_exp = power < expo;
  c.tail_power_below_exp = power_tail < expo_tail;
  c.pointwise_tighter = c.pointwise_power_below_exp ? TighterBound::exponential : TighterBound::power;
  c.tail_tighter = c.tail_power_below_exp ? TighterBound::exponential : TighterBound::power;
  return c;
}

double pointwise_lower_crossover(int l) {
  return 12.0 * std::log(l / 2.0) / (2.0 * kPi * kPi - 15.0) - 1.0;
}

}  // namespace rieszkit
