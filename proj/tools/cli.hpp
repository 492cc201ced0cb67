#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tensorhn::cli {

enum ExitCode : int {
  kOk = 0,
  kSelftestFailed = 1,
  kInputError = 2,
  kStrictAnomaly = 3,
};

/// Runs one command. `args` excludes the program name; input is read from
/// `in` unless --input names a file.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace tensorhn::cli
