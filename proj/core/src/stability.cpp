#include "rieszkit/stability.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rieszkit/analysis.hpp"
#include "rieszkit/error.hpp"

namespace rieszkit {

namespace {

constexpr double kPi = std::numbers::pi;

double nu_of(const AmplificationQuery& q) {
  return q.d_alpha / (2.0 * std::cos(kPi * q.alpha / 2.0) * std::pow(q.h, q.alpha));
}

// Pieces of the closed form xi = (P - G - i S) / (P + G + i S).
struct Parts {
  double P, G, S;
};

Parts closed_form_parts(const AmplificationQuery& q, double f) {
  const double nu = nu_of(q);
  const double s = std::pow(std::sin(q.theta / 2.0), 2);
  const double sn = std::sin(q.theta);
  const double h = q.h, tau = q.tau, d1 = q.d1, d2 = q.d2;
  switch (q.scheme) {
    case Scheme::order2:
      return {2.0 * h / tau, 4.0 * d2 / h * s + 2.0 * nu * h * f, d1 * sn};
    case Scheme::order4: {
      const double s1 = 2.0 / tau * (1.0 - s / 3.0);
      const double s2 = 2.0 * s * (2.0 * d2 / (h * h) + d1 * d1 / (6.0 * d2));
      const double s3 = 2.0 * (1.0 - s / 3.0) * f;
      const double s4 = (d1 * h / (6.0 * tau * d2) + d1 / h) - d1 * h / (6.0 * d2) * f;
      return {s1, s2 + s3 * nu, s4 * nu * sn};
    }
    case Scheme::order6: {
      const double s2 = s * s;
      const double w1 = 2.0 / (45.0 * tau) * (45.0 - 8.0 * s2);
      const double w2 = 2.0 * d2 / (3.0 * h * h) * (7.0 - std::cos(q.theta)) * s + 16.0 * d1 * d1 / (45.0 * d2) * s2;
      const double w3 = 2.0 / 45.0 * (45.0 - 8.0 * s2) * f;
      const double w4 = -8.0 * d1 * h / (45.0 * tau * d2) * s + d1 / (3.0 * h) * (4.0 - std::cos(q.theta)) +
                        8.0 * d1 * h * nu / (45.0 * d2) * s * f;
      return {w1, w2 + w3 * nu, w4 * sn};
    }
  }
  return {1.0, 0.0, 0.0};
}

std::complex<double> stencil_symbol(const std::vector<double>& st, double theta) {
  const int hw = static_cast<int>(st.size()) / 2;
  std::complex<double> s = 0.0;
  for (int k = 0; k < static_cast<int>(st.size()); ++k) s += st[k] * std::polar(1.0, (k - hw) * theta);
  return s;
}

}  // namespace

void AmplificationQuery::validate() const {
  std::ostringstream msg;
  if (!(alpha > 0.0 && alpha < 1.0)) msg << "alpha=" << alpha << " outside (0,1)";
  else if (!(h > 0.0) || !(tau > 0.0)) msg << "h and tau must be > 0";
  else if (!(d1 > 0.0) || !(d2 > 0.0) || !(d_alpha > 0.0)) msg << "d1, d2, d_alpha must be > 0";
  else if (std::abs(theta) > kPi + 1e-12) msg << "theta=" << theta << " outside [-pi, pi]";
  else return;
  throw DomainError("amplification query: " + msg.str());
}

std::complex<double> amplification_factor(const AmplificationQuery& q) {
  q.validate();
  const Parts p = closed_form_parts(q, symbol_value(riesz_order(q.scheme), q.alpha, q.theta));
  return std::complex<double>(p.P - p.G, -p.S) / std::complex<double>(p.P + p.G, p.S);
}

double damping_group(const AmplificationQuery& q) {
  q.validate();
  return closed_form_parts(q, symbol_value(riesz_order(q.scheme), q.alpha, q.theta)).G;
}

std::complex<double> stencil_amplification_factor(const AmplificationQuery& q) {
  q.validate();
  const Stencils st = scheme_stencils(q.scheme, q.d1, q.d2, q.h);
  const std::complex<double> C = stencil_symbol(st.compact, q.theta);
  const std::complex<double> D = stencil_symbol(st.diffusion, q.theta);
  const double f = symbol_value(riesz_order(q.scheme), q.alpha, q.theta);
  const double nu = nu_of(q);
  return ((2.0 / q.tau) * C + D - 2.0 * nu * f * C) / ((2.0 / q.tau) * C - D + 2.0 * nu * f * C);
}

StabilityReport stability_scan(Scheme scheme, double alpha, double h, double tau, double d1, double d2,
                               double d_alpha, int grid_size) {
  if (grid_size < 1024) throw DomainError("stability_scan: grid_size must be >= 1024");
  AmplificationQuery q{scheme, alpha, h, tau, d1, d2, d_alpha, 0.0};
  q.validate();
  StabilityReport r{scheme, alpha, h, tau, d1, d2, d_alpha, grid_size};
  r.min_damping = std::numeric_limits<double>::infinity();
  const int p = riesz_order(scheme);
  for (int k = 0; k <= grid_size; ++k) {
    q.theta = -kPi + 2.0 * kPi * k / grid_size;
    const double f = symbol_value(p, alpha, q.theta);
    const Parts parts = closed_form_parts(q, f);
    const double mag =
        std::abs(std::complex<double>(parts.P - parts.G, -parts.S) / std::complex<double>(parts.P + parts.G, parts.S));
    if (mag > r.max_abs_xi) {
      r.max_abs_xi = mag;
      r.argmax_theta = q.theta;
    }
    r.min_damping = std::min(r.min_damping, parts.G);
    r.max_abs_xi_stencil = std::max(r.max_abs_xi_stencil, std::abs(stencil_amplification_factor(q)));
  }
  r.pass = r.max_abs_xi <= 1.0 + kStabilityTolerance;
  return r;
}

}  // namespace rieszkit
