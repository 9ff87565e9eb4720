#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "network_io.hpp"
#include "topoctrl/types.hpp"

namespace {

constexpr const char* kDescription =
    "topoctrl - decide controllability of diffusively coupled networks from edge signs";

void add_format(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{kDescription};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");
  app.footer(
      "Exit codes: 0 certified/ok, 1 not certified or assumption failed,\n"
      "2 numerically refuted, 10 usage error, 11 bad network file,\n"
      "12 enumeration cap exceeded (see --max-n and TOPOCTRL_ENUM_CAP).");

  topoctrl::cli::CheckOptions check;
  CLI::App* c = app.add_subcommand(
      "check", "Certify a network (path decomposition + graph merging by default)");
  c->add_option("file", check.file, "Network JSON file")->required();
  c->add_flag("--brute-force", check.brute_force,
              "Exhaustively sweep all state subsets instead of the pipeline");
  c->add_option("--max-n", check.max_n,
                "Override the enumeration cap (default from TOPOCTRL_ENUM_CAP or 20)")
      ->check(CLI::Range(1, 62));
  c->add_option("--refute-trials", check.refute_trials,
                "On NotCertified, sample this many realizations looking for a "
                "rank-deficient controllability matrix")
      ->check(CLI::NonNegativeNumber);
  c->add_option("--mode", check.mode, "Sampling mode for --refute-trials")
      ->check(CLI::IsMember({"continuous", "cont", "integer", "int"}))
      ->capture_default_str();
  c->add_option("--seed", check.seed, "RNG seed for --refute-trials")
      ->capture_default_str();
  add_format(c, check.format);

  topoctrl::cli::DecomposeOptions decompose;
  CLI::App* d = app.add_subcommand(
      "decompose", "List the node-disjoint path decomposition and coverage");
  d->add_option("file", decompose.file, "Network JSON file")->required();
  add_format(d, decompose.format);

  topoctrl::cli::VerifyOptions verify;
  CLI::App* v = app.add_subcommand(
      "verify", "Monte-Carlo rank check of sampled sign-consistent realizations");
  v->add_option("file", verify.file, "Network JSON file")->required();
  v->add_option("--trials", verify.trials, "Number of sampled realizations")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  v->add_option("--mode", verify.mode, "Sampling mode: continuous or integer")
      ->check(CLI::IsMember({"continuous", "cont", "integer", "int"}))
      ->capture_default_str();
  v->add_option("--seed", verify.seed, "RNG seed")->capture_default_str();
  v->add_option("--csv", verify.csv, "Write per-trial \"trial,rank\" CSV here (- for stdout)");
  add_format(v, verify.format);

  topoctrl::cli::AssumptionsOptions assumptions;
  CLI::App* a = app.add_subcommand(
      "assumptions", "Check accessibility, row rank of [L,B], and diagonal feasibility");
  a->add_option("file", assumptions.file, "Network JSON file")->required();
  a->add_option("--trials", assumptions.trials, "Row-rank refutation trials")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  a->add_option("--seed", assumptions.seed, "RNG seed")->capture_default_str();
  add_format(a, assumptions.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return topoctrl::cli::kExitUsage;
  }

  try {
    if (c->parsed()) return topoctrl::cli::run_check(check, std::cout);
    if (d->parsed()) return topoctrl::cli::run_decompose(decompose, std::cout);
    if (v->parsed()) return topoctrl::cli::run_verify(verify, std::cout);
    if (a->parsed()) return topoctrl::cli::run_assumptions(assumptions, std::cout);
  } catch (const topoctrl::io::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return topoctrl::cli::kExitParse;
  } catch (const topoctrl::InvalidNetworkError& e) {
    std::cerr << "error: invalid network: " << e.what() << "\n";
    return topoctrl::cli::kExitParse;
  } catch (const topoctrl::CapExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return topoctrl::cli::kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return topoctrl::cli::kExitUsage;
  }
  return topoctrl::cli::kExitUsage;  // unreachable: a subcommand is required
}
