#include <CLI11.hpp>
#include <iostream>

#include "m0k/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"exact Chow-ring calculator for genus-0 marked curves with collisions"};
  app.require_subcommand(1);
  app.fallthrough();

  m0k::JobConfig cfg;
  app.add_option("--input,-i", cfg.input_path, "complex or weights JSON file")
      ->required();
  app.add_option("--format,-f", cfg.format, "text | json | csv");
  app.add_option("--threads,-t", cfg.threads, "worker threads for independent pieces");
  app.add_option("--max-labels", cfg.max_labels, "size guard (default 8)");

  app.add_subcommand("validate", "check the complex invariants and tripartedness");
  app.add_subcommand("divisors", "list the boundary divisor generators");
  auto* strata = app.add_subcommand("strata", "enumerate stratum graphs");
  int codim = -1;
  strata->add_option("--codim", codim, "only this codimension");
  strata->add_flag("--all", cfg.all_codims, "all codimensions, with cover relations");
  app.add_subcommand("ring", "list the presentation's relations");
  app.add_subcommand("betti", "graded ranks and torsion of the presented ring");
  auto* multiply = app.add_subcommand("multiply", "product of two ring elements");
  multiply->add_option("elements", cfg.args, "two elements (JSON or generator name)")
      ->expected(2);
  auto* sclass = app.add_subcommand("stratum-class", "class of a stratum graph");
  sclass->add_option("graph", cfg.args, "graph JSON")->expected(1);
  auto* wdvv = app.add_subcommand("wdvv", "pairing relation for four labels");
  wdvv->add_option("labels", cfg.args, "four distinct labels")->expected(4);
  auto* push = app.add_subcommand("pushforward", "push a two-sided divisor class down");
  push->add_option("subset", cfg.args, "comma-separated labels")->expected(1);
  auto* pc = app.add_subcommand("pointcount", "finite-field point counts");
  long q = 0;
  pc->add_option("--q", q, "evaluate at this prime power instead of interpolating");
  app.add_subcommand("selftest", "oracle comparison and brute-force cross-checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // help stays 0, every usage problem is 1
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (codim >= 0) cfg.codim = codim;
  if (pc->count("--q")) cfg.q = q;

  auto result = m0k::run(cfg);
  std::cout << result.output;
  std::cerr << result.error;
  return result.exit_code;
}
