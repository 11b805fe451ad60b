// dvbcheck: runs the randomized identity suites and reports residuals.

#include <CLI11.hpp>
#include <iostream>

#include "suites.hpp"

int main(int argc, char** argv) {
  using namespace dvb::verify;

  CLI::App app{"Randomized verification of double vector bundle identities"};
  app.require_subcommand(1);
  CLI::App* run_cmd = app.add_subcommand("run", "Run a verification suite");

  SuiteConfig cfg;
  int trials = 0;
  std::string report = "text";
  std::vector<std::string> choices = suite_ids();
  choices.push_back("all");

  run_cmd->add_option("--suite", cfg.suite, "Suite id")->required()->check(CLI::IsMember(choices));
  run_cmd->add_option("--seed", cfg.seed, "Random seed")->envname("DVBCHECK_SEED");
  auto* trials_opt = run_cmd->add_option("--trials", trials, "Cases per suite")->check(CLI::Range(1, 100000000));
  run_cmd->add_option("--dim-base", cfg.dim_base, "Upper bound for sampled dimensions")->check(CLI::Range(1, 64));
  run_cmd->add_option("--tol-exact", cfg.tol_exact, "Tolerance for exact identities")->check(CLI::PositiveNumber);
  run_cmd->add_option("--tol-fd", cfg.tol_fd, "Tolerance for finite-difference cross-checks")->check(CLI::PositiveNumber);
  run_cmd->add_option("--report", report, "Report format")->check(CLI::IsMember({"text", "json"}));
  run_cmd->add_flag("--negative-controls", cfg.negative_controls, "Run Poisson suites on a non-Poisson bivector");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (trials_opt->count() > 0) cfg.trials = trials;

  try {
    const std::vector<SuiteReport> reports = run(cfg);
    std::cout << emit_report(reports, report == "json" ? ReportFormat::kJson : ReportFormat::kText, cfg.suite);
    return exit_code(reports);
  } catch (const UsageError& e) {
    std::cerr << "dvbcheck: " << e.what() << "\n";
    return 2;
  }
}
