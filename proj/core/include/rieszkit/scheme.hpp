#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rieszkit/convergence.hpp"
#include "rieszkit/problem.hpp"

namespace rieszkit {

enum class Scheme { order2, order4, order6 };

std::string_view to_string(Scheme s);
std::optional<Scheme> parse_scheme(std::string_view name);
// Order of the Riesz weights embedded in the scheme: 2, 4 or 6.
int riesz_order(Scheme s);

// Centered stencils of one scheme row, before the time and Riesz terms are attached:
// `compact` acts on time differences, sources and Riesz rows; `diffusion` approximates
// d2 u_xx - d1 u_x. Both have odd length.
struct Stencils {
  std::vector<double> compact;
  std::vector<double> diffusion;
};

Stencils scheme_stencils(Scheme s, double d1, double d2, double h);

// Rows j = 1..M-1 of
//   A u^{k+1} = B u^k + sum_i source_stencil[i] s(x_{j+i-w}, t_{k+1/2})
// with A = (2/tau) C - D + nu C R and B = (2/tau) C + D - nu C R, where R applies the
// two-sided weights with zero extension and nu = d_alpha / (2 cos(pi alpha/2) h^alpha).
struct SchemeMatrices {
  Scheme scheme = Scheme::order2;
  int M = 0;
  double a = 0.0;
  double b = 1.0;
  double h = 0.0;
  double tau = 0.0;
  double alpha = 0.0;
  double nu = 0.0;
  Eigen::MatrixXd A;
  Eigen::MatrixXd B;
  std::vector<double> source_stencil;  // 2 * compact stencil
  std::shared_ptr<const Eigen::PartialPivLU<Eigen::MatrixXd>> lu;  // factorization of A
};

// Throws DomainError for invalid parameters, NumericalError if A is singular.
SchemeMatrices assemble(Scheme scheme, const ProblemSpec& spec, int M, double tau);

// Source contribution for one step: `s_half` holds s(x_j, t_{k+1/2}) for j = 0..M.
Eigen::VectorXd source_term(const SchemeMatrices& mats, const std::vector<double>& s_half);

// Advances the interior state (size M-1) by one step using the stored factorization.
Eigen::VectorXd step(const SchemeMatrices& mats, const Eigen::VectorXd& u_k, const std::vector<double>& s_half);

struct SolutionGrid {
  ProblemSpec spec;
  Scheme scheme = Scheme::order2;
  int M = 0;
  int N = 0;
  double h = 0.0;
  double tau = 0.0;
  std::vector<double> values;  // (N+1) x (M+1), row k holds time level k
  std::optional<double> final_error;       // max_j |u_j^N - u(x_j, T)|
  std::optional<double> all_levels_error;  // max over every level k >= 1
  std::vector<std::string> warnings;

  double at(int k, int j) const { return values[static_cast<std::size_t>(k) * (M + 1) + j]; }
  std::vector<double> level(int k) const;
};

// Parameter combinations that run but sit outside a proven stability range.
std::vector<std::string> scheme_warnings(Scheme scheme, const ProblemSpec& spec);

SolutionGrid solve(Scheme scheme, const ProblemSpec& spec, int M, int N);

// Final-time errors along a ladder of (M, N) rungs, with orders against tau and h.
ConvergenceReport convergence_study(Scheme scheme, std::string_view problem, double alpha,
                                    const std::vector<std::pair<int, int>>& ladder);

}  // namespace rieszkit
