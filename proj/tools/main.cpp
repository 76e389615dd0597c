#include <iostream>

#include <CLI11.hpp>

#include "trm/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Totally reflexive modules over graph rings: analysis, construction and verification"};
  app.require_subcommand(1);

  trm::RunConfig cfg;
  std::string input;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--prime", cfg.prime, "prime characteristic of the base field")->capture_default_str();
    sub->add_flag("--rational", cfg.rational, "work over the rationals");
    sub->add_option("--degree-bound", cfg.degree_bound, "truncation degree D (>= 2)");
    sub->add_option("--seed", cfg.seed, "seed for every random choice")->capture_default_str();
    sub->add_flag("--json", cfg.json, "print the report as JSON");
  };

  auto* analyze = app.add_subcommand("analyze", "run every check on a graph");
  add_common(analyze);
  analyze->add_option("graph", input, "graph JSON file");
  analyze->add_flag("--section4", cfg.section4, "use the built-in ten-vertex graph");
  analyze->add_option("--trials", cfg.wlp_trials, "random forms for the WLP check")->capture_default_str();
  analyze->add_option("--budget", cfg.ezd_budget, "candidates for the exact zero divisor search")->capture_default_str();

  auto* build = app.add_subcommand("build", "build a certified complex window");
  add_common(build);
  build->add_option("graph", input, "graph JSON file");
  build->add_flag("--section4", cfg.section4, "use the built-in ten-vertex graph");
  build->add_option("--mode", cfg.mode, "ezd or factory")->check(CLI::IsMember({"ezd", "factory"}))->capture_default_str();
  build->add_flag("--canonical", cfg.canonical, "factory mode: use the explicit periodic blocks");
  build->add_option("--retries", cfg.retries, "factory mode: sampling budget")->capture_default_str();
  build->add_option("--forward", cfg.forward, "factory mode: forward extensions")->capture_default_str();
  build->add_option("--backward", cfg.backward, "factory mode: backward extensions")->capture_default_str();
  build->add_option("--budget", cfg.ezd_budget, "candidates for the exact zero divisor search")->capture_default_str();
  build->add_option("-o,--output", cfg.output, "write the complex here instead of stdout");

  auto* lift = app.add_subcommand("lift", "lift a complex up the reduction chain");
  add_common(lift);
  lift->add_option("complex", input, "complex JSON file")->required();
  lift->add_option("--steps", cfg.lift_steps, "number of lifting steps (default: up to R_Gamma)");
  lift->add_option("-o,--output", cfg.output, "write the complex here instead of stdout");

  auto* verify = app.add_subcommand("verify", "verify a complex file");
  add_common(verify);
  verify->add_option("complex", input, "complex JSON file")->required();

  auto* factory = app.add_subcommand("factory", "build a window over the ten-vertex ring");
  add_common(factory);
  factory->add_flag("--canonical", cfg.canonical, "use the explicit periodic blocks");
  factory->add_option("--retries", cfg.retries, "sampling budget")->capture_default_str();
  factory->add_option("--forward", cfg.forward, "forward extensions")->capture_default_str();
  factory->add_option("--backward", cfg.backward, "backward extensions")->capture_default_str();
  factory->add_option("-o,--output", cfg.output, "write the complex here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? trm::kExitOk : trm::kExitError;
  }
  if (cfg.degree_bound != 0 && cfg.degree_bound < 2) {
    std::cerr << "error: --degree-bound must be at least 2\n";
    return trm::kExitError;
  }

  if (*analyze) return trm::cmd_analyze(input, cfg, std::cout, std::cerr);
  if (*build) return trm::cmd_build(input, cfg, std::cout, std::cerr);
  if (*lift) return trm::cmd_lift(input, cfg, std::cout, std::cerr);
  if (*verify) return trm::cmd_verify(input, cfg, std::cout, std::cerr);
  if (*factory) return trm::cmd_factory(cfg, std::cout, std::cerr);
  return trm::kExitError;
}
