#include "rieszkit/scheme.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "rieszkit/analysis.hpp"
#include "rieszkit/coefficients.hpp"
#include "rieszkit/error.hpp"

namespace rieszkit {

namespace {

std::string describe(Scheme s, const ProblemSpec& spec, int M, double tau) {
  std::ostringstream os;
  os << "scheme=" << to_string(s) << " problem=" << spec.name << " alpha=" << spec.alpha << " M=" << M
     << " tau=" << tau << " d1=" << spec.d1 << " d2=" << spec.d2 << " d_alpha=" << spec.d_alpha;
  return os.str();
}

// Calls visit(k, state) for k = 1..N after each step; state holds the interior values.
void march(const SchemeMatrices& mats, const ProblemSpec& spec, int N,
           const std::function<void(int, const Eigen::VectorXd&)>& visit) {
  const int M = mats.M;
  Eigen::VectorXd u(M - 1);
  for (int j = 1; j < M; ++j) u[j - 1] = spec.initial(spec.a + j * mats.h);
  std::vector<double> s_half(static_cast<std::size_t>(M) + 1);
  for (int k = 0; k < N; ++k) {
    const double t_half = (k + 0.5) * mats.tau;
    for (int j = 0; j <= M; ++j) s_half[j] = spec.source(j == M ? spec.b : spec.a + j * mats.h, t_half);
    u = step(mats, u, s_half);
    if (!u.allFinite()) {
      std::ostringstream msg;
      msg << "non-finite state at step " << k + 1 << " (" << describe(mats.scheme, spec, M, mats.tau) << ")";
      throw NumericalError(msg.str());
    }
    visit(k + 1, u);
  }
}

}  // namespace

std::string_view to_string(Scheme s) {
  switch (s) {
    case Scheme::order2: return "order2";
    case Scheme::order4: return "order4";
    case Scheme::order6: return "order6";
  }
  return "?";
}

std::optional<Scheme> parse_scheme(std::string_view name) {
  if (name == "order2") return Scheme::order2;
  if (name == "order4") return Scheme::order4;
  if (name == "order6") return Scheme::order6;
  return std::nullopt;
}

int riesz_order(Scheme s) {
  switch (s) {
    case Scheme::order2: return 2;
    case Scheme::order4: return 4;
    case Scheme::order6: return 6;
  }
  return 2;
}

Stencils scheme_stencils(Scheme s, double d1, double d2, double h) {
  switch (s) {
    case Scheme::order2:
      return {{1.0}, {d2 / (h * h) + d1 / (2 * h), -2 * d2 / (h * h), d2 / (h * h) - d1 / (2 * h)}};
    case Scheme::order4: {
      const double r = d1 * h / (24 * d2);
      const double q = d2 / (h * h) + d1 * d1 / (12 * d2);
      return {{1.0 / 12 + r, 5.0 / 6, 1.0 / 12 - r}, {q + d1 / (2 * h), -2 * q, q - d1 / (2 * h)}};
    }
    case Scheme::order6: {
      const double r = d1 * h / d2;
      const double h2 = h * h;
      const double g = d1 * d1 / d2;
      // The published parameters e_i enter with the opposite sign to the diffusion stencil.
      const double e1 = d2 / (12 * h2) + d1 / (12 * h) + g / 45;
      const double e2 = -(4 * d2 / (3 * h2) + 2 * d1 / (3 * h) + 4 * g / 45);
      const double e3 = 5 * d2 / (2 * h2) + 2 * g / 15;
      const double e4 = -(4 * d2 / (3 * h2) - 2 * d1 / (3 * h) + 4 * g / 45);
      const double e5 = d2 / (12 * h2) - d1 / (12 * h) + g / 45;
      return {{-(1 + r) / 90, (4 + 2 * r) / 90, 14.0 / 15, (4 - 2 * r) / 90, -(1 - r) / 90},
              {-e1, -e2, -e3, -e4, -e5}};
    }
  }
  return {};
}

SchemeMatrices assemble(Scheme scheme, const ProblemSpec& spec, int M, double tau) {
  spec.validate();
  const int min_m = scheme == Scheme::order6 ? 6 : 4;
  if (M < min_m) {
    std::ostringstream msg;
    msg << "assemble: M=" << M << " too small for " << to_string(scheme) << " (need M >= " << min_m << ")";
    throw DomainError(msg.str());
  }
  if (!(tau > 0.0)) throw DomainError("assemble: tau must be > 0");

  SchemeMatrices m;
  m.scheme = scheme;
  m.M = M;
  m.a = spec.a;
  m.b = spec.b;
  m.h = (spec.b - spec.a) / M;
  m.tau = tau;
  m.alpha = spec.alpha;
  m.nu = spec.d_alpha / (2.0 * std::cos(std::numbers::pi * spec.alpha / 2.0) * std::pow(m.h, spec.alpha));
  if (spec.d_alpha > 0.0 && !(m.nu > 0.0)) throw NumericalError("assemble: nu not positive (" + describe(scheme, spec, M, tau) + ")");

  const Stencils st = scheme_stencils(scheme, spec.d1, spec.d2, m.h);
  const int hw = static_cast<int>(st.compact.size()) / 2;
  const int hd = static_cast<int>(st.diffusion.size()) / 2;
  const CoefficientTable w = expand_generating_function(riesz_order(scheme), spec.alpha, M + hw + 1);

  const int n = M - 1;
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd D = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd K = Eigen::MatrixXd::Zero(n, n);
  for (int j = 1; j <= n; ++j) {
    const int r = j - 1;
    for (int k = 0; k < static_cast<int>(st.compact.size()); ++k) {
      const int i = j + k - hw;  // node whose Riesz row is mixed in; may lie outside 1..M-1
      const double c = st.compact[k];
      if (i >= 1 && i <= n) C(r, i - 1) += c;
      for (int mm = 1; mm <= n; ++mm) {
        const double wv = w[static_cast<std::size_t>(std::abs(i - mm))];
        K(r, mm - 1) += c * (i == mm ? 2.0 * wv : wv);
      }
    }
    for (int k = 0; k < static_cast<int>(st.diffusion.size()); ++k) {
      const int i = j + k - hd;
      if (i >= 1 && i <= n) D(r, i - 1) += st.diffusion[k];
    }
  }
  m.A = (2.0 / tau) * C - D + m.nu * K;
  m.B = (2.0 / tau) * C + D - m.nu * K;
  m.source_stencil.resize(st.compact.size());
  for (std::size_t k = 0; k < st.compact.size(); ++k) m.source_stencil[k] = 2.0 * st.compact[k];

  auto lu = std::make_shared<Eigen::PartialPivLU<Eigen::MatrixXd>>(m.A);
  const double rc = lu->rcond();
  if (!std::isfinite(rc) || rc < 1e-14) {
    std::ostringstream msg;
    msg << "assemble: singular system matrix (rcond=" << rc << ", " << describe(scheme, spec, M, tau) << ")";
    throw NumericalError(msg.str());
  }
  m.lu = std::move(lu);
  return m;
}

Eigen::VectorXd source_term(const SchemeMatrices& mats, const std::vector<double>& s_half) {
  const int M = mats.M;
  if (static_cast<int>(s_half.size()) != M + 1) throw DomainError("source_term: expected M+1 source samples");
  const int hw = static_cast<int>(mats.source_stencil.size()) / 2;
  Eigen::VectorXd f = Eigen::VectorXd::Zero(M - 1);
  for (int j = 1; j < M; ++j) {
    double acc = 0.0;
    for (int k = 0; k < static_cast<int>(mats.source_stencil.size()); ++k) {
      const int i = j + k - hw;
      if (i >= 0 && i <= M) acc += mats.source_stencil[k] * s_half[i];
    }
    f[j - 1] = acc;
  }
  return f;
}

Eigen::VectorXd step(const SchemeMatrices& mats, const Eigen::VectorXd& u_k, const std::vector<double>& s_half) {
  if (!mats.lu) throw DomainError("step: matrices were not factored");
  if (u_k.size() != mats.M - 1) throw DomainError("step: state size must be M-1");
  return mats.lu->solve(mats.B * u_k + source_term(mats, s_half));
}

std::vector<double> SolutionGrid::level(int k) const {
  const auto first = values.begin() + static_cast<std::ptrdiff_t>(k) * (M + 1);
  return {first, first + M + 1};
}

std::vector<std::string> scheme_warnings(Scheme scheme, const ProblemSpec& spec) {
  std::vector<std::string> out;
  if (scheme == Scheme::order4 && spec.alpha > alpha_threshold_p4()) {
    std::ostringstream msg;
    msg << "order4 with alpha=" << spec.alpha << " exceeds the sufficient stability bound "
        << alpha_threshold_p4();
    out.push_back(msg.str());
  }
  return out;
}

SolutionGrid solve(Scheme scheme, const ProblemSpec& spec, int M, int N) {
  if (N < 1) throw DomainError("solve: N must be >= 1");
  const double tau = spec.T / N;
  const SchemeMatrices mats = assemble(scheme, spec, M, tau);

  SolutionGrid g;
  g.spec = spec;
  g.scheme = scheme;
  g.M = M;
  g.N = N;
  g.h = mats.h;
  g.tau = tau;
  g.warnings = scheme_warnings(scheme, spec);
  g.values.assign(static_cast<std::size_t>(N + 1) * (M + 1), 0.0);
  for (int j = 1; j < M; ++j) g.values[j] = spec.initial(spec.a + j * mats.h);

  double worst = 0.0;
  march(mats, spec, N, [&](int k, const Eigen::VectorXd& u) {
    double* row = g.values.data() + static_cast<std::size_t>(k) * (M + 1);
    for (int j = 1; j < M; ++j) row[j] = u[j - 1];
    if (spec.has_exact()) {
      const double t = k == N ? spec.T : k * tau;
      double e = 0.0;
      for (int j = 1; j < M; ++j) e = std::max(e, std::abs(row[j] - spec.exact(spec.a + j * mats.h, t)));
      worst = std::max(worst, e);
      if (k == N) g.final_error = e;
    }
  });
  if (spec.has_exact()) g.all_levels_error = worst;
  return g;
}

ConvergenceReport convergence_study(Scheme scheme, std::string_view problem, double alpha,
                                    const std::vector<std::pair<int, int>>& ladder) {
  if (ladder.empty()) throw DomainError("convergence_study: empty ladder");
  ConvergenceReport rep;
  rep.method = std::string(to_string(scheme));
  rep.problem = std::string(problem);
  rep.alpha = alpha;
  rep.norm = "max-abs-final";
  for (const auto& [M, N] : ladder) {
    const ProblemSpec spec = builtin_problem(problem, alpha);
    if (N < 1) throw DomainError("convergence_study: N must be >= 1");
    const double tau = spec.T / N;
    const SchemeMatrices mats = assemble(scheme, spec, M, tau);
    double err = 0.0;
    march(mats, spec, N, [&](int k, const Eigen::VectorXd& u) {
      if (k != N) return;
      for (int j = 1; j < M; ++j) err = std::max(err, std::abs(u[j - 1] - spec.exact(spec.a + j * mats.h, spec.T)));
    });
    ConvergenceRow row;
    row.M = M;
    row.N = N;
    row.h = mats.h;
    row.tau = tau;
    row.error = err;
    rep.rows.push_back(row);
  }
  fill_orders(rep);
  return rep;
}

}  // namespace rieszkit
