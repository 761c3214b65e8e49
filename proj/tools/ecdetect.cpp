#include <iostream>

#include "CLI11.hpp"
#include "ecdetect/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Numerical embedded component detection"};
  app.require_subcommand(1);

  ecdetect::CommandOptions opts;
  std::string problem;
  double delta = 0.0;
  std::uint64_t seed = 0;
  int max_degree = 0, order = 0, degree = 0;

  const std::map<std::string, std::string> help{
      {"dual", "truncated dual space dimensions and reduced basis"},
      {"hilbert", "local Hilbert function, dimension and multiplicity"},
      {"corners", "g-corners, s-corners, rho and mu of the local staircase"},
      {"member", "local ideal membership of the given polynomials"},
      {"truncate", "ideal truncation J_d at each 0-dimensional suspect"},
      {"embedded", "embedded component verdict for every suspect"},
      {"deflate", "deflation system of the given order"},
      {"interpolate", "degree-e part of the ideal of an isolated component"}};

  for (const auto& name : ecdetect::command_names()) {
    CLI::App* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("problem", problem, "problem file (JSON)")->required()->check(CLI::ExistingFile);
    sub->add_option("--delta", delta, "SVD rank threshold relative to the largest singular value");
    sub->add_option("--seed", seed, "random seed");
    sub->add_option("--max-degree", max_degree, "degree cap for the staircase and membership loops");
    sub->add_option("--order", order, "dual order (dual, hilbert, interpolate)");
    sub->add_option("--degree", degree, "degree d (truncate, deflate) or e (interpolate)");
    sub->add_option("--component", opts.component, "component id (interpolate)");
    sub->add_option("--poly", opts.polynomials, "polynomial to test (member); repeatable");
    sub->add_flag("--quiet,-q", opts.quiet, "no progress lines on stderr");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : ecdetect::kExitError;
  }

  CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--delta")) opts.delta = delta;
  if (sub->count("--seed")) opts.seed = seed;
  if (sub->count("--max-degree")) opts.max_degree = max_degree;
  if (sub->count("--order")) opts.order = order;
  if (sub->count("--degree")) opts.degree = degree;

  const auto result = ecdetect::run_command_file(sub->get_name(), problem, opts, &std::cerr);
  std::cout << result.output;
  return result.exit_code;
}
