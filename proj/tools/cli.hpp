#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bpc::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kOk = 0,
  kViolation = 1,  // constraint violated or input is not a codeword
  kUsage = 2,      // usage or parameter error
  kInternal = 3,   // an encoder hit an exhausted source
};

/// Runs one command line. `in` backs the "-" placeholder for --perm and
/// --input; payload goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace bpc::cli
