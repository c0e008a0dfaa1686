#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace rieszkit {

struct ConvergenceRow {
  int M = 0;
  int N = 0;                  // 0 when there is no time discretization
  double h = 0.0;
  std::optional<double> tau;  // absent for purely spatial studies
  double error = 0.0;
  std::optional<double> temporal_order;
  std::optional<double> spatial_order;

  friend bool operator==(const ConvergenceRow&, const ConvergenceRow&) = default;
};

struct ConvergenceReport {
  std::string method;   // "p2".."p6" for the operator study, scheme name for the PDE study
  std::string problem;  // example1 / example2 / example3
  double alpha = 0.0;
  std::string norm;     // how each error was measured
  std::vector<ConvergenceRow> rows;

  friend bool operator==(const ConvergenceReport&, const ConvergenceReport&) = default;
};

// ln(e1/e2) / ln(s1/s2); empty when s1 == s2 or either error is not positive.
std::optional<double> observed_order(double e1, double e2, double s1, double s2);

// Fills temporal/spatial orders between consecutive rows.
void fill_orders(ConvergenceReport& report);

// CSV with columns method,problem,alpha,norm,M,N,h,tau,error,temporal_order,spatial_order.
// Absent values are empty fields. Reals use "%.16e", which round-trips every double.
void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceReport>& reports);
// Inverse of the above; consecutive rows with equal (method, problem, alpha, norm) form one report.
std::vector<ConvergenceReport> read_convergence_csv(std::istream& is);

// Shared number format for every CSV the toolkit writes.
std::string format_real(double v);

}  // namespace rieszkit
