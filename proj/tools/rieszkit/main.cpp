#include <CLI11.hpp>
#include <iostream>

#include "rieszkit/commands.hpp"

int main(int argc, char** argv) {
  using namespace rieszkit::cli;

  CLI::App app{"rieszkit: fractional-derivative coefficients, Riesz approximations and Crank-Nicolson solvers"};
  app.require_subcommand(1);

  RunOptions opts;
  std::string out_dir;
  for (const auto& name : command_names()) {
    CLI::App* sub = app.add_subcommand(name, "run the '" + name + "' study from the [" + name + "] config section");
    sub->add_option("--config", opts.config, "INI-style config file")->required();
    sub->add_option("--out", out_dir, "output directory (overrides [output] dir)");
    sub->add_option("--threads", opts.threads, "worker threads for independent cells")->check(CLI::PositiveNumber);
    sub->callback([&opts, name] { opts.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }
  if (!out_dir.empty()) opts.out_dir = out_dir;

  try {
    const RunResult r = run(opts);
    for (const auto& w : r.warnings) std::cerr << "rieszkit: warning: " << w << '\n';
    std::cout << r.csv.string() << '\n' << r.text.string() << '\n';
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "rieszkit: error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}
