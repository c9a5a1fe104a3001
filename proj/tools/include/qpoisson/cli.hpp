#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpoisson::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInputError = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`; the return value is the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Hex SHA-256 of a byte string.
std::string sha256_hex(const std::string& bytes);

}  // namespace qpoisson::cli
