#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace topoctrl::cli {

// Process exit codes shared by every subcommand.
//   0  certified / all checks passed
//   1  not certified / an assumption failed (inconclusive, not a disproof)
//   2  numerically refuted / rank-deficient realization found
//   10 command-line usage error
//   11 unreadable or invalid network file
//   12 problem size exceeds the enumeration cap
enum ExitCode : int {
  kExitCertified = 0,
  kExitOk = 0,
  kExitNotCertified = 1,
  kExitAssumptionFailed = 1,
  kExitRefuted = 2,
  kExitUsage = 10,
  kExitParse = 11,
  kExitCap = 12,
};

struct CheckOptions {
  std::string file;
  bool brute_force = false;
  int max_n = 0;  // 0 = use the library default / TOPOCTRL_ENUM_CAP
  std::string format = "text";
  // When > 0 and the verdict is NotCertified, run a Monte-Carlo refutation.
  int refute_trials = 0;
  std::string mode = "integer";
  std::uint64_t seed = 1;
};

struct DecomposeOptions {
  std::string file;
  std::string format = "text";
};

struct VerifyOptions {
  std::string file;
  int trials = 1000;
  std::string mode = "continuous";
  std::uint64_t seed = 1;
  std::string csv;  // empty = no CSV; "-" = stdout
  std::string format = "text";
};

struct AssumptionsOptions {
  std::string file;
  int trials = 1000;
  std::uint64_t seed = 1;
  std::string format = "text";
};

// Each command writes its report to `out` and returns a process exit code.
// File and network errors propagate as exceptions; main() maps them to
// kExitParse / kExitCap.
int run_check(const CheckOptions& opt, std::ostream& out);
int run_decompose(const DecomposeOptions& opt, std::ostream& out);
int run_verify(const VerifyOptions& opt, std::ostream& out);
int run_assumptions(const AssumptionsOptions& opt, std::ostream& out);

}  // namespace topoctrl::cli
