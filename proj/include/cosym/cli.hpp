#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

#include "cosym/betti.hpp"

namespace cosym::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Version of the JSON report layout; bumped on incompatible changes.
inline constexpr int kSchemaVersion = 1;

/// Fault injections for negative controls (hidden --inject flag).
enum class Injection { none, phi_star_sign, twist_sign, k3_sign };

struct RunConfig {
  std::string command;
  int n = 1;
  bool json = false;
  bool strict = false;
  bool integer = false;
  std::vector<Count> bh;
  bool bh_given = false;
  Injection inject = Injection::none;
  int threads = 0;  // 0: COSYM_THREADS or 1
};

struct CommandOutput {
  int exit_code = kExitSuccess;
  std::string text;  // human-readable report
  std::string json;  // machine-readable report
};

CommandOutput cmd_verify_identities(const RunConfig& config);
CommandOutput cmd_so41(const RunConfig& config);
CommandOutput cmd_betti(const RunConfig& config);
CommandOutput cmd_homology(const RunConfig& config);
CommandOutput cmd_report(const RunConfig& config);

/// Parses "1,0,4,0,1" or "[1,0,4,0,1]". Throws std::invalid_argument.
std::vector<Count> parse_sequence(const std::string& text);

/// Full entry point: parses argv, runs the command, writes to out/err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cosym::cli
