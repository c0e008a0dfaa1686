#pragma once

#include <complex>

#include "rieszkit/scheme.hpp"

namespace rieszkit {

struct AmplificationQuery {
  Scheme scheme = Scheme::order2;
  double alpha = 0.5;
  double h = 0.1;
  double tau = 0.1;
  double d1 = 1.0;
  double d2 = 1.0;
  double d_alpha = 1.0;
  double theta = 0.0;

  void validate() const;
};

// Closed-form xi(theta) in the published numerator/denominator layout, with the cosine
// series replaced by the exact symbol.
std::complex<double> amplification_factor(const AmplificationQuery& q);

// Damping group of the closed form: xi = (P - G - iS)/(P + G + iS) with P > 0, so
// |xi| <= 1 exactly when G >= 0.
double damping_group(const AmplificationQuery& q);

// Fourier symbol of the assembled interior rows:
//   ((2/tau) C + D - 2 nu f C) / ((2/tau) C - D + 2 nu f C)
// with C, D the stencil symbols. For order2 it coincides with amplification_factor.
std::complex<double> stencil_amplification_factor(const AmplificationQuery& q);

struct StabilityReport {
  Scheme scheme = Scheme::order2;
  double alpha = 0.0;
  double h = 0.0;
  double tau = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double d_alpha = 0.0;
  int grid_size = 0;
  double max_abs_xi = 0.0;
  double argmax_theta = 0.0;
  double min_damping = 0.0;
  double max_abs_xi_stencil = 0.0;
  bool pass = false;  // max_abs_xi <= 1 + kStabilityTolerance
};

inline constexpr double kStabilityTolerance = 1e-12;

StabilityReport stability_scan(Scheme scheme, double alpha, double h, double tau, double d1, double d2,
                               double d_alpha, int grid_size);

}  // namespace rieszkit
