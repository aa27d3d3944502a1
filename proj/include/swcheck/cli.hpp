#pragma once

// Command-line front end:
//   swcheck <clifford|selfdual|curvature|model|dirac|solution|all> [options]
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage, configuration or parse error.

#include <fstream>
#include <ostream>
#include <string>

#include <CLI11.hpp>

#include "swcheck/suites.hpp"

namespace swcheck::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Residual checks for spinor, curvature and Seiberg-Witten identities on contact 5-manifolds",
               "swcheck"};
  app.set_help_flag("--help", "Print this help message and exit");
  std::string suite;
  SuiteConfig cfg;
  std::optional<std::string> output;

  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  app.add_option("suite", suite, "Check suite to run")->required()->check(CLI::IsMember(choices));
  app.add_option("--model", cfg.model, "Builtin model (heisenberg, synthetic) or JSON model file");
  app.add_option("--samples", cfg.samples, "Number of sample points or random draws")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
  app.add_option("--tol", cfg.tol, "Tolerance overriding every per-check default")->check(CLI::PositiveNumber);
  app.add_option("--h", cfg.h, "Finite-difference step")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--output", output, "Write the JSON report to this file instead of standard output");
  app.add_option("--scalar", cfg.scalar, "Scalar curvature for the solution suite (negative)");
  app.add_option("--field", cfg.field, "Spinor field JSON file for the dirac suite");
  app.add_flag("--perturb", cfg.perturb, "Run the negative control (must fail)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  SuiteOutcome outcome;
  try {
    outcome = suite == "all" ? run_all(cfg) : timed_suite(suite, cfg);
  } catch (const ModelError& e) {
    err << "swcheck: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "swcheck: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "swcheck: " << e.what() << "\n";
    return kExitUsage;
  }

  const std::string text = outcome.report.dump(2) + "\n";
  if (output) {
    std::ofstream file(*output, std::ios::binary);
    if (!file) {
      err << "swcheck: " << *output << ": cannot write file\n";
      return kExitUsage;
    }
    file << text;
  } else {
    out << text;
  }
  return outcome.pass ? kExitPass : kExitFail;
}

}  // namespace swcheck::cli
