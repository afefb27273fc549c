#ifndef PGW_TOOLS_CLI_APP_HPP
#define PGW_TOOLS_CLI_APP_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace pgw::cli {

enum class Command { table, verify, asymptotics, fit, equilibrium, bridge };
enum class Format { csv, json };

// Reals stay decimal strings until the working precision is known.
struct RunConfig {
  Command command = Command::verify;
  std::string t = "0.5";
  std::string lambda = "0";
  long nmax = 10;
  std::optional<std::string> n;
  std::optional<long> precision_bits;
  std::optional<std::string> tolerance;
  Format format = Format::csv;
  std::optional<std::string> out_path;
  std::string kind = "beta";
};

// Exit codes.
constexpr int kOk = 0;
constexpr int kChecksFailed = 1;
constexpr int kConfigError = 2;
constexpr int kRuntimeError = 3;  // precision or convergence failure

// Runs the config and writes the artifact to `out` (or to out_path).
// Diagnostics go to `err` as one line.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Parses argv-style arguments (program name excluded) and runs them.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace pgw::cli

#endif  // PGW_TOOLS_CLI_APP_HPP
