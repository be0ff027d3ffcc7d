#ifndef NULLCERT_TOOLS_COMMANDS_HPP
#define NULLCERT_TOOLS_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "nullcert/groebner.hpp"

namespace nullcert::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kLimit = 2, kInvariant = 3 };

enum class Format { text, json };

struct CliConfig {
  std::string subcommand;
  std::string input = "-";  // "-" reads stdin
  std::optional<std::string> order;
  Format format = Format::text;
  ComputationLimits limits;
  std::uint64_t seed = 42;
  std::size_t trials = 100;
  unsigned workers = 1;
};

// Each command takes the raw system text (ignored by fuzz) and writes its
// report to `out`, diagnostics to `err`. The return value is the exit code.
int cmd_gb(const CliConfig& config, std::string_view text, std::ostream& out, std::ostream& err);
int cmd_consistent(const CliConfig& config, std::string_view text, std::ostream& out, std::ostream& err);
int cmd_bernd(const CliConfig& config, std::string_view text, std::ostream& out, std::ostream& err);
int cmd_certify(const CliConfig& config, std::string_view text, std::ostream& out, std::ostream& err);
int cmd_fuzz(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Reads the input named by `config.input` (or `in` for "-") and dispatches on
/// `config.subcommand`.
int run(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace nullcert::cli

#endif  // NULLCERT_TOOLS_COMMANDS_HPP
