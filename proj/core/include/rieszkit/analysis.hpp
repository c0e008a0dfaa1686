#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rieszkit {

// W_p(e^{i theta})^alpha. Evaluated as (1 - z)^alpha * Q(z)^alpha with W_p = (1 - z) Q and
// principal branches on each factor. Q stays inside |arg| < pi on the unit circle, so this is
// the analytic continuation from theta = 0; a single principal power of W_p is not (it jumps
// for p = 5, 6 where arg W_p leaves (-pi, pi]).
std::complex<double> symbol_complex(int p, double alpha, double theta);

// Re of the above: the even cosine series sum_l w_{p,l} cos(l theta).
double symbol_value(int p, double alpha, double theta);

struct SymbolCheck {
  bool nonnegative = false;
  double min_value = 0.0;
  double argmin_theta = 0.0;
};

// Uniform grid theta_k = -pi + 2 pi k / grid_size, k = 0..grid_size.
SymbolCheck check_symbol_nonnegativity(int p, double alpha, int grid_size);

inline constexpr double kSymbolTolerance = 1e-12;

// pi / (pi - arccos(1/5) + 2 arctan(191 sqrt(6) / 317)).
double alpha_threshold_p4();

// Largest alpha for which |alpha * arg W_p(e^{i theta})| <= pi/2 on the whole circle: a
// sufficient condition for a nonnegative symbol. Found by a dense scan refined with golden
// section search. For p = 4 this reproduces alpha_threshold_p4().
double sufficient_alpha_threshold(int p);

enum class TailDirection { nondecreasing, nonincreasing };

struct MonotonicityResult {
  std::optional<int> tail_start;  // empty: no monotone tail below L
  TailDirection direction = TailDirection::nondecreasing;
};

// Smallest l* with w_l <= w_{l+1} (alpha < 1) or w_l >= w_{l+1} (alpha > 1) for l* <= l < L.
MonotonicityResult monotonicity_scan(int p, double alpha, int L);

// Published tail onset for orders 2..5 (first value for alpha < 1, second for alpha > 1).
// Empty for p = 6, which has no claimed monotone tail.
std::optional<int> claimed_tail_start(int p, double alpha);

enum class BoundFamily {
  first_order_exp,          // |w_{1,l}| between an exponential-factor lower and a power upper bound
  first_order_exp_tail,     // tail sum of |w_{1,k}|, k >= l, with the matching loose pair
  first_order_power,        // |w_{1,l}| with the (2/l)^{2(alpha+1)} lower bound
  first_order_power_tail,   // tail sum with the (2/l)^{2 alpha + 1} lower bound
  shifted_first_order,      // |w_{1,l}| at order 1 + alpha, powers of 3/l
  shifted_first_order_tail,
  second_order,             // |w_{2,l}| at order alpha
  shifted_second_order,     // |w_{2,l}| at order 1 + alpha
};

std::string_view to_string(BoundFamily f);
std::optional<BoundFamily> parse_bound_family(std::string_view tag);
const std::vector<BoundFamily>& all_bound_families();
int minimum_index(BoundFamily f);

struct BoundCheckRecord {
  BoundFamily family = BoundFamily::first_order_exp;
  double alpha = 0.0;
  int l = 0;
  double lower = 0.0;
  double observed = 0.0;
  double upper = 0.0;
  // Tail families only: exact tail minus the truncated sum (zero for pointwise families).
  double remainder = 0.0;
  bool holds = false;                 // lower < observed < upper
  bool holds_with_remainder = false;  // additionally observed + remainder < upper
};

// Number of terms kept in truncated tail sums.
inline constexpr int kTailTerms = 100000;

BoundCheckRecord evaluate_bounds(BoundFamily family, double alpha, int l);

enum class TighterBound { power, exponential };

struct LowerBoundComparison {
  // Pointwise: power-type lower bound below the exponential one (the latter is tighter).
  bool pointwise_power_below_exp = false;
  // Tail: power-type tail lower bound below the (1-alpha)/5 (2/l)^alpha one.
  bool tail_power_below_exp = false;
  TighterBound pointwise_tighter = TighterBound::power;
  TighterBound tail_tighter = TighterBound::power;
};

LowerBoundComparison compare_lower_bounds(double alpha, int l);

// alpha at which the two pointwise lower bounds cross for index l:
// 12 ln(l/2) / (2 pi^2 - 15) - 1.
double pointwise_lower_crossover(int l);

// Checks 1 - x < e^{-x} on (0, 1) and 1 - x > e^{-2x} on (0, 0.7968] over n grid points each.
bool check_exponential_sandwich(int n);

}  // namespace rieszkit
