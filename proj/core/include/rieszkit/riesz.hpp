#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "rieszkit/coefficients.hpp"
#include "rieszkit/convergence.hpp"
#include "rieszkit/grid.hpp"

namespace rieszkit {

// -1/(2 cos(pi alpha/2)): the Riesz prefactor. Rejects alpha = 1.
double riesz_prefactor(double alpha);

// Shifted-sample approximation on the grid with zero extension. Rows 0 and M are 0.
GridFunction riesz_apply(const CoefficientTable& table, const GridFunction& f);

// Same sum evaluated at an arbitrary point x in [a, b]: samples f(x -+ l h) while they stay
// inside [a, b], zero outside.
double riesz_apply_at(const CoefficientTable& table, const std::function<double(double)>& f,
                      double a, double b, double h, double x);

// Exact Riesz derivative of x^p (1-x)^p on [0, 1] (zero outside).
double analytic_riesz_fp(int p, double alpha, double x);

enum class Example1Metric {
  midpoint,      // |error| at x = 1/2, sampled off-grid when M is odd
  interior_max,  // max over interior nodes
};

std::string_view to_string(Example1Metric m);

// One row per M, h = 1/M, orders from ln-ratio of h.
ConvergenceReport example1_convergence(int p, double alpha, const std::vector<int>& M_list,
                                       Example1Metric metric = Example1Metric::midpoint);

}  // namespace rieszkit
