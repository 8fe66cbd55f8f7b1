#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hyperfact/report.hpp"

namespace hyperfact::cli {

enum ExitCode : int {
  kOk = 0,
  kViolations = 1,
  kUsage = 2,
  kOverflow = 3,
};

struct CliConfig {
  std::string subcommand;
  unsigned jobs = 1;
  std::optional<std::string> out;
  std::optional<ReportFormat> format;  // resolved: human, or json when --out is set
};

/// Runs the command line `args` (without the program name). Normal output
/// goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperfact::cli
