#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace biderlab::cli {

enum ExitCode { exit_ok = 0, exit_verdict_failure = 1, exit_usage = 2 };

/// Runs one subcommand; `args` excludes the program name. Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace biderlab::cli
