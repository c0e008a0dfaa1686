#include "rieszkit/commands.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "rieszkit/pool.hpp"
#include "rieszkit/rieszkit.hpp"

namespace rieszkit::cli {

namespace {

using Handler = std::function<CommandOutput(const Section&, int)>;

// --- shared validation -----------------------------------------------------------------

std::vector<double> alphas(const Section& s, double lo, double hi, bool exclude_one) {
  std::vector<double> out = s.get_real_list("alpha");
  for (double a : out) {
    if (!(a > lo && a < hi)) {
      std::ostringstream msg;
      msg << "alpha " << a << " outside (" << lo << ", " << hi << ")";
      s.fail("alpha", msg.str());
    }
    if (exclude_one && a == 1.0) s.fail("alpha", "alpha = 1 is not supported (the Riesz prefactor is singular)");
  }
  return out;
}

std::vector<int> orders(const Section& s, int lo, int hi) {
  std::vector<int> out = s.get_int_list("p");
  for (int p : out)
    if (p < lo || p > hi) s.fail("p", "order " + std::to_string(p) + " outside " + std::to_string(lo) + ".." + std::to_string(hi));
  return out;
}

Scheme scheme_of(const Section& s, const std::string& name) {
  const auto sc = parse_scheme(name);
  if (!sc) s.fail("scheme", "unknown scheme '" + name + "' (expected order2, order4 or order6)");
  return *sc;
}

std::string problem_of(const Section& s) {
  const std::string name = s.get_string("problem");
  const auto& known = builtin_problem_names();
  if (std::find(known.begin(), known.end(), name) == known.end()) {
    std::string list;
    for (const auto& k : known) list += (list.empty() ? "" : ", ") + k;
    s.fail("problem", "unknown problem '" + name + "' (expected " + list + ")");
  }
  return name;
}

void strictly_increasing(const Section& s, const std::string& key, const std::vector<int>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] <= v[i - 1]) s.fail(key, "resolutions must be strictly increasing");
}

template <class T>
std::vector<std::pair<T, double>> cells(const std::vector<T>& outer, const std::vector<double>& alpha) {
  std::vector<std::pair<T, double>> out;
  for (const auto& o : outer)
    for (double a : alpha) out.emplace_back(o, a);
  return out;
}

std::string int_cell(long long v) { return std::to_string(v); }

// --- convergence tables ----------------------------------------------------------------

const std::vector<std::string> kConvergenceHeader{"method", "problem", "alpha", "norm", "M", "N",
                                                  "h", "tau", "error", "temporal_order", "spatial_order"};

void add_convergence(CommandOutput& out, const ConvergenceReport& r, bool with_time,
                     const std::optional<std::string>& lead = std::nullopt) {
  for (const auto& row : r.rows) {
    out.csv.add({r.method, r.problem, real_cell(r.alpha), r.norm, int_cell(row.M), int_cell(row.N), real_cell(row.h),
                 real_cell(row.tau), real_cell(row.error), real_cell(row.temporal_order), real_cell(row.spatial_order)});
    std::vector<std::string> text;
    if (lead) text.push_back(*lead);
    text.insert(text.end(), {fixed_cell(r.alpha, 2), "1/" + int_cell(row.M)});
    if (with_time) text.push_back("1/" + int_cell(row.N));
    text.push_back(sci_cell(row.error));
    if (with_time) text.push_back(fixed_cell(row.temporal_order));
    text.push_back(fixed_cell(row.spatial_order));
    out.text.add(std::move(text));
  }
}

// --- subcommands -----------------------------------------------------------------------

CommandOutput cmd_coeffs(const Section& s, int threads) {
  s.require_known({"p", "alpha", "length", "l_min", "route"});
  const auto ps = orders(s, 1, 6);
  const auto as = alphas(s, 0.0, 2.0, false);
  const int L = s.get_int("length");
  if (L < 0) s.fail("length", "must be >= 0");
  const int l_min = s.get_int("l_min", 0);
  if (l_min < 0 || l_min > L) s.fail("l_min", "must lie in 0..length");
  const std::string route = s.get_string("route", "series");
  if (route != "series" && route != "closed-form" && route != "both")
    s.fail("route", "expected series, closed-form or both, got '" + route + "'");
  if (route != "series")
    for (int p : ps)
      if (p < 2) s.fail("route", "the closed-form route covers p = 2..6 only");

  struct Cell {
    std::vector<double> series, closed;
  };
  const auto grid = cells(ps, as);
  const auto results = parallel_map<Cell>(grid.size(), threads, [&](std::size_t i) {
    const auto [p, a] = grid[i];
    Cell c;
    if (route != "closed-form") c.series = expand_generating_function(p, a, L).values();
    if (route != "series") c.closed = closed_form_coeffs(p, a, L);
    return c;
  });

  CommandOutput out;
  const bool both = route == "both";
  out.csv.header = {"p", "alpha", "l", "value"};
  if (both) out.csv.header.insert(out.csv.header.end(), {"closed_form", "abs_diff"});
  out.text.header = {"p", "alpha", "l", "value"};
  if (both) out.text.header.push_back("abs_diff");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [p, a] = grid[i];
    const Cell& c = results[i];
    for (int l = l_min; l <= L; ++l) {
      const double v = route == "closed-form" ? c.closed[l] : c.series[l];
      std::vector<std::string> row{int_cell(p), real_cell(a), int_cell(l), real_cell(v)};
      std::vector<std::string> text{int_cell(p), fixed_cell(a, 2), int_cell(l), sci_cell(v, 10)};
      if (both) {
        const double d = std::abs(c.closed[l] - c.series[l]);
        row.insert(row.end(), {real_cell(c.closed[l]), real_cell(d)});
        text.push_back(sci_cell(d, 2));
      }
      out.csv.add(std::move(row));
      out.text.add(std::move(text));
    }
  }
  return out;
}

CommandOutput cmd_symbol(const Section& s, int threads) {
  s.require_known({"p", "alpha", "grid_size"});
  const auto ps = orders(s, 1, 6);
  const auto as = alphas(s, 0.0, 2.0, false);
  const int n = s.get_int("grid_size", 4096);
  if (n < 1024) s.fail("grid_size", "must be >= 1024");

  const auto grid = cells(ps, as);
  const auto checks = parallel_map<SymbolCheck>(grid.size(), threads, [&](std::size_t i) {
    return check_symbol_nonnegativity(grid[i].first, grid[i].second, n);
  });
  std::map<int, double> threshold;
  for (int p : ps)
    if (!threshold.count(p)) threshold[p] = sufficient_alpha_threshold(p);

  CommandOutput out;
  out.csv.header = {"p", "alpha", "grid_size", "min_value", "argmin_theta", "nonnegative", "sufficient_alpha"};
  out.text.header = {"p", "alpha", "min symbol", "argmin theta", "nonnegative", "sufficient alpha"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [p, a] = grid[i];
    const auto& c = checks[i];
    out.csv.add({int_cell(p), real_cell(a), int_cell(n), real_cell(c.min_value), real_cell(c.argmin_theta),
                 bool_cell(c.nonnegative), real_cell(threshold[p])});
    out.text.add({int_cell(p), fixed_cell(a, 2), sci_cell(c.min_value), fixed_cell(c.argmin_theta, 6),
                  c.nonnegative ? "yes" : "NO", fixed_cell(threshold[p], 6)});
    if (!c.nonnegative) {
      std::ostringstream w;
      w << "symbol negative for p=" << p << ", alpha=" << a << ": min " << c.min_value << " at theta " << c.argmin_theta;
      out.warnings.push_back(w.str());
    }
  }
  return out;
}

CommandOutput cmd_bounds(const Section& s, int threads) {
  s.require_known({"family", "alpha", "l_min", "l_max"});
  std::vector<BoundFamily> families;
  const std::vector<std::string> tags = s.has("family") ? s.get_list("family") : std::vector<std::string>{"all"};
  for (const auto& tag : tags) {
    if (tag == "all") {
      families.insert(families.end(), all_bound_families().begin(), all_bound_families().end());
    } else if (const auto f = parse_bound_family(tag)) {
      families.push_back(*f);
    } else {
      std::string list;
      for (auto f2 : all_bound_families()) list += std::string(list.empty() ? "" : ", ") + std::string(to_string(f2));
      s.fail("family", "unknown family '" + tag + "' (expected all or one of: " + list + ")");
    }
  }
  const auto as = alphas(s, 0.0, 1.0, false);
  const int l_min = s.get_int("l_min", 3);
  const int l_max = s.get_int("l_max", 100);
  if (l_min < 1 || l_max < l_min) s.fail("l_max", "need 1 <= l_min <= l_max");

  const auto grid = cells(families, as);
  const auto results = parallel_map<std::vector<BoundCheckRecord>>(grid.size(), threads, [&](std::size_t i) {
    const auto [f, a] = grid[i];
    std::vector<BoundCheckRecord> v;
    for (int l = std::max(l_min, minimum_index(f)); l <= l_max; ++l) v.push_back(evaluate_bounds(f, a, l));
    return v;
  });

  CommandOutput out;
  out.csv.header = {"family", "alpha", "l", "lower", "observed", "upper", "remainder", "holds", "holds_with_remainder"};
  out.text.header = {"family", "alpha", "l range", "cells", "holds", "first failing l"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [f, a] = grid[i];
    int held = 0;
    std::optional<int> first_fail;
    for (const auto& r : results[i]) {
      out.csv.add({std::string(to_string(f)), real_cell(a), int_cell(r.l), real_cell(r.lower), real_cell(r.observed),
                   real_cell(r.upper), real_cell(r.remainder), bool_cell(r.holds), bool_cell(r.holds_with_remainder)});
      const bool ok = r.holds && (r.remainder == 0.0 || r.holds_with_remainder);
      held += ok;
      if (!ok && !first_fail) first_fail = r.l;
    }
    const int lo = std::max(l_min, minimum_index(f));
    out.text.add({std::string(to_string(f)), fixed_cell(a, 2), int_cell(lo) + ".." + int_cell(l_max),
                  int_cell(static_cast<long long>(results[i].size())), int_cell(held),
                  first_fail ? int_cell(*first_fail) : "-"});
  }
  return out;
}

CommandOutput cmd_monotonicity(const Section& s, int threads) {
  s.require_known({"p", "alpha", "length"});
  const auto ps = orders(s, 2, 6);
  const auto as = alphas(s, 0.0, 2.0, true);
  const int L = s.get_int("length", 500);
  if (L < 200) s.fail("length", "must be >= 200");

  const auto grid = cells(ps, as);
  const auto scans = parallel_map<MonotonicityResult>(grid.size(), threads, [&](std::size_t i) {
    return monotonicity_scan(grid[i].first, grid[i].second, L);
  });

  CommandOutput out;
  out.csv.header = {"p", "alpha", "length", "direction", "tail_start", "claimed_start", "within_claim"};
  out.text.header = {"p", "alpha", "direction", "tail start", "claimed", "within claim"};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto [p, a] = grid[i];
    const auto& r = scans[i];
    const auto claim = claimed_tail_start(p, a);
    const std::string dir = r.direction == TailDirection::nondecreasing ? "nondecreasing" : "nonincreasing";
    std::string within;
    if (claim) within = bool_cell(r.tail_start && *r.tail_start <= *claim);
    const std::string start = r.tail_start ? int_cell(*r.tail_start) : "";
    const std::string claimed = claim ? int_cell(*claim) : "";
    out.csv.add({int_cell(p), real_cell(a), int_cell(L), dir, start, claimed, within});
    out.text.add({int_cell(p), fixed_cell(a, 2), dir, start.empty() ? "-" : start, claimed.empty() ? "-" : claimed,
                  within.empty() ? "-" : within});
  }
  return out;
}

CommandOutput cmd_riesz(const Section& s, int threads) {
  s.require_known({"p", "alpha", "M", "metric"});
  const auto ps = orders(s, 2, 6);
  const auto as = alphas(s, 0.0, 1.0, false);
  const auto Ms = s.get_int_list("M");
  for (int M : Ms)
    if (M < 2) s.fail("M", "every M must be >= 2");
  strictly_increasing(s, "M", Ms);
  const std::string metric_name = s.get_string("metric", "midpoint-abs");
  Example1Metric metric = Example1Metric::midpoint;
  if (metric_name == to_string(Example1Metric::interior_max))
    metric = Example1Metric::interior_max;
  else if (metric_name != to_string(Example1Metric::midpoint))
    s.fail("metric", "expected midpoint-abs or interior-max-abs, got '" + metric_name + "'");

  const auto grid = cells(ps, as);
  const auto reports = parallel_map<ConvergenceReport>(grid.size(), threads, [&](std::size_t i) {
    return example1_convergence(grid[i].first, grid[i].second, Ms, metric);
  });

  CommandOutput out;
  out.csv.header = kConvergenceHeader;
  out.text.header = {"p", "alpha", "h", "error", "order"};
  for (std::size_t i = 0; i < grid.size(); ++i) add_convergence(out, reports[i], false, int_cell(grid[i].first));
  return out;
}

std::vector<std::pair<int, int>> ladder_of(const Section& s) {
  const auto ladder = s.get_ladder("ladder");
  std::vector<int> Ms;
  for (const auto& [M, N] : ladder) {
    if (M < 2 || N < 1) s.fail("ladder", "need M >= 2 and N >= 1 on every rung");
    Ms.push_back(M);
  }
  strictly_increasing(s, "ladder", Ms);
  for (std::size_t i = 1; i < ladder.size(); ++i)
    if (ladder[i].second < ladder[i - 1].second) s.fail("ladder", "N must not decrease along the ladder");
  return ladder;
}

CommandOutput cmd_solve(const Section& s, int) {
  s.require_known({"scheme", "problem", "alpha", "M", "N", "levels"});
  const Scheme scheme = scheme_of(s, s.get_string("scheme"));
  const std::string problem = problem_of(s);
  const auto as = alphas(s, 0.0, 1.0, false);
  if (as.size() != 1) s.fail("alpha", "solve takes exactly one alpha");
  const int M = s.get_int("M");
  const int N = s.get_int("N");
  if (N < 1) s.fail("N", "must be >= 1");
  const std::string levels = s.get_string("levels", "final");
  if (levels != "final" && levels != "all") s.fail("levels", "expected final or all, got '" + levels + "'");

  const ProblemSpec spec = builtin_problem(problem, as[0]);
  const SolutionGrid sol = solve(scheme, spec, M, N);

  CommandOutput out;
  out.warnings = sol.warnings;
  out.csv.header = {"k", "t", "j", "x", "u", "exact", "abs_error"};
  const UniformGrid g(spec.a, spec.b, M);
  for (int k = levels == "all" ? 0 : N; k <= N; ++k) {
    const double t = k == N ? spec.T : k * sol.tau;
    for (int j = 0; j <= M; ++j) {
      const double u = sol.at(k, j);
      const double ex = spec.exact(g.x(j), t);
      out.csv.add({int_cell(k), real_cell(t), int_cell(j), real_cell(g.x(j)), real_cell(u), real_cell(ex),
                   real_cell(std::abs(u - ex))});
    }
  }
  out.text.header = {"quantity", "value"};
  out.text.add({"scheme", std::string(to_string(scheme))});
  out.text.add({"problem", problem});
  out.text.add({"alpha", fixed_cell(as[0], 4)});
  out.text.add({"M", int_cell(M)});
  out.text.add({"N", int_cell(N)});
  out.text.add({"h", sci_cell(sol.h)});
  out.text.add({"tau", sci_cell(sol.tau)});
  out.text.add({"final-time max error", sci_cell(sol.final_error)});
  out.text.add({"all-levels max error", sci_cell(sol.all_levels_error)});
  for (const auto& w : sol.warnings) out.text.add({"warning", w});
  return out;
}

CommandOutput cmd_convergence(const Section& s, int threads) {
  s.require_known({"scheme", "problem", "alpha", "ladder"});
  const Scheme scheme = scheme_of(s, s.get_string("scheme"));
  const std::string problem = problem_of(s);
  const auto as = alphas(s, 0.0, 1.0, false);
  const auto ladder = ladder_of(s);

  const auto reports = parallel_map<ConvergenceReport>(as.size(), threads, [&](std::size_t i) {
    return convergence_study(scheme, problem, as[i], ladder);
  });

  CommandOutput out;
  for (double a : as)
    for (const auto& w : scheme_warnings(scheme, builtin_problem(problem, a))) out.warnings.push_back(w);
  out.csv.header = kConvergenceHeader;
  out.text.header = {"alpha", "h", "tau", "error", "temporal order", "spatial order"};
  for (const auto& r : reports) add_convergence(out, r, true);
  return out;
}

CommandOutput cmd_stability(const Section& s, int threads) {
  s.require_known({"scheme", "alpha", "h", "tau", "d1", "d2", "d_alpha", "grid_size"});
  std::vector<Scheme> schemes;
  for (const auto& name : s.get_list("scheme")) schemes.push_back(scheme_of(s, name));
  const auto as = alphas(s, 0.0, 1.0, false);
  const auto hs = s.get_real_list("h");
  const auto taus = s.get_real_list("tau");
  for (double h : hs)
    if (!(h > 0)) s.fail("h", "every h must be > 0");
  for (double t : taus)
    if (!(t > 0)) s.fail("tau", "every tau must be > 0");
  const double d1 = s.get_real("d1", 1.0), d2 = s.get_real("d2", 1.0), da = s.get_real("d_alpha", 1.0);
  if (!(d1 > 0)) s.fail("d1", "must be > 0");
  if (!(d2 > 0)) s.fail("d2", "must be > 0");
  if (!(da > 0)) s.fail("d_alpha", "must be > 0");
  const int n = s.get_int("grid_size", 4096);
  if (n < 1024) s.fail("grid_size", "must be >= 1024");

  struct Cell {
    Scheme scheme;
    double alpha, h, tau;
  };
  std::vector<Cell> grid;
  for (auto sc : schemes)
    for (double a : as)
      for (double h : hs)
        for (double t : taus) grid.push_back({sc, a, h, t});
  const auto reports = parallel_map<StabilityReport>(grid.size(), threads, [&](std::size_t i) {
    const Cell& c = grid[i];
    return stability_scan(c.scheme, c.alpha, c.h, c.tau, d1, d2, da, n);
  });

  CommandOutput out;
  out.csv.header = {"scheme", "alpha", "h", "tau", "d1", "d2", "d_alpha", "grid_size", "max_abs_xi",
                    "argmax_theta", "min_damping", "max_abs_xi_stencil", "pass"};
  out.text.header = {"scheme", "alpha", "h", "tau", "max|xi|", "argmax theta", "min damping", "stencil max|xi|", "pass"};
  for (const auto& r : reports) {
    out.csv.add({std::string(to_string(r.scheme)), real_cell(r.alpha), real_cell(r.h), real_cell(r.tau), real_cell(r.d1),
                 real_cell(r.d2), real_cell(r.d_alpha), int_cell(r.grid_size), real_cell(r.max_abs_xi),
                 real_cell(r.argmax_theta), real_cell(r.min_damping), real_cell(r.max_abs_xi_stencil), bool_cell(r.pass)});
    out.text.add({std::string(to_string(r.scheme)), fixed_cell(r.alpha, 2), sci_cell(r.h, 3), sci_cell(r.tau, 3),
                  fixed_cell(r.max_abs_xi, 12), fixed_cell(r.argmax_theta, 6), sci_cell(r.min_damping, 3),
                  fixed_cell(r.max_abs_xi_stencil, 12), r.pass ? "yes" : "NO"});
    if (!r.pass) {
      std::ostringstream w;
      w << to_string(r.scheme) << " unstable at alpha=" << r.alpha << ", h=" << r.h << ", tau=" << r.tau
        << ": max|xi| = " << r.max_abs_xi << " at theta " << r.argmax_theta;
      out.warnings.push_back(w.str());
    }
  }
  return out;
}

const std::vector<std::pair<std::string, Handler>>& handlers() {
  static const std::vector<std::pair<std::string, Handler>> h{
      {"coeffs", cmd_coeffs},   {"symbol", cmd_symbol},           {"bounds", cmd_bounds},
      {"monotonicity", cmd_monotonicity}, {"riesz", cmd_riesz},   {"solve", cmd_solve},
      {"convergence", cmd_convergence},   {"stability", cmd_stability},
  };
  return h;
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw DomainError("cannot write " + path.string());
  body(os);
  os.flush();
  if (!os) throw DomainError("write failed for " + path.string());
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [n, _] : handlers()) v.push_back(n);
    return v;
  }();
  return names;
}

CommandOutput execute(const std::string& command, const Config& config, int threads) {
  for (const auto& [name, fn] : handlers())
    if (name == command) return fn(config.section(command), threads);
  throw UsageError("unknown subcommand '" + command + "'");
}

RunResult run(const RunOptions& o) {
  if (o.threads < 1) throw UsageError("--threads must be >= 1");
  if (std::find(command_names().begin(), command_names().end(), o.command) == command_names().end())
    throw UsageError("unknown subcommand '" + o.command + "'");

  const auto start = std::chrono::steady_clock::now();
  const std::string started = utc_now();
  const Config cfg = Config::load(o.config);

  std::filesystem::path dir = "results";
  if (cfg.has_section("output")) {
    const Section& out = cfg.section("output");
    out.require_known({"dir"});
    dir = out.get_string("dir", dir.string());
  }
  if (o.out_dir) dir = *o.out_dir;

  const CommandOutput out = execute(o.command, cfg, o.threads);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw DomainError("cannot create output directory " + dir.string() + ": " + ec.message());

  RunResult r;
  r.csv = dir / (o.command + ".csv");
  r.text = dir / (o.command + ".txt");
  r.manifest = dir / (o.command + ".manifest");
  r.warnings = out.warnings;
  write_file(r.csv, [&](std::ostream& os) { write_csv(os, out.csv); });
  write_file(r.text, [&](std::ostream& os) { write_text(os, out.text); });
  write_file(r.manifest, [&](std::ostream& os) {
    os << "tool = rieszkit\n"
       << "version = " << RIESZKIT_VERSION << "\n"
       << "command = " << o.command << "\n"
       << "config = " << std::filesystem::absolute(o.config).string() << "\n"
       << "threads = " << o.threads << "\n"
       << "started_utc = " << started << "\n"
       << "wall_seconds = " << seconds << "\n"
       << "csv = " << r.csv.filename().string() << "\n"
       << "csv_rows = " << out.csv.rows.size() << "\n"
       << "text = " << r.text.filename().string() << "\n";
    for (const auto& w : out.warnings) os << "warning = " << w << "\n";
  });
  return r;
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const DomainError*>(&e)) return 1;
  return 2;
}

}  // namespace rieszkit::cli
