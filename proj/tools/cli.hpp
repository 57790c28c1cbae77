#ifndef TROPMON_TOOLS_CLI_HPP_
#define TROPMON_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace tropmon::cli {

  enum ExitCode : int { ok = 0, failure = 1, parse_error = 2, unsupported = 3 };

  inline constexpr std::uint64_t default_seed_value = 0xC0FFEE;

  // TROP_SEED if set (decimal or 0x-prefixed hex), else 0xC0FFEE.
  std::uint64_t default_seed();

  // Runs the command line `args` (without the program name), writing
  // results to `out` and diagnostics to `err`. Returns the exit code.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace tropmon::cli

#endif  // TROPMON_TOOLS_CLI_HPP_
