#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace proxlat::cli {

/// Exit statuses: every asserted property held, some property failed, the
/// input or the command line could not be parsed.
enum Status : int { kOk = 0, kPropertyFailure = 1, kParseError = 2 };

/// Runs one command. `args` excludes the program name. Result documents go
/// to `out` (or the --output file); one-line diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace proxlat::cli
