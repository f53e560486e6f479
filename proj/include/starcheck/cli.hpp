#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace starcheck {

/// Exit statuses of the command-line front end.
enum ExitCode : int { exit_ok = 0, exit_negative = 1, exit_usage = 2 };

/// Runs one command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Directory holding the bundled identity corpora.
std::string bundled_data_dir();

}  // namespace starcheck
