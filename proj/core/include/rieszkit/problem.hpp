#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace rieszkit {

// u_t = d2 u_xx - d1 u_x + d_alpha * Riesz^alpha u + s on [a, b] x (0, T], u = 0 at x = a, b.
struct ProblemSpec {
  std::string name;
  double d1 = 0.0;
  double d2 = 1.0;
  double d_alpha = 0.0;
  double alpha = 0.5;
  double a = 0.0;
  double b = 1.0;
  double T = 1.0;
  std::function<double(double, double)> source;
  std::function<double(double)> initial;
  std::function<double(double, double)> exact;  // may be empty

  bool has_exact() const { return static_cast<bool>(exact); }
  // Throws DomainError naming the first violated field.
  void validate() const;
};

// "example2": d1 = d2 = d_alpha = 1, u = e^t x^6 (1-x)^6.
// "example3": d1 = 2, d2 = 1, d_alpha = alpha^2, u = sin(t) x^8 (1-x)^8.
ProblemSpec builtin_problem(std::string_view name, double alpha);
const std::vector<std::string>& builtin_problem_names();

}  // namespace rieszkit
