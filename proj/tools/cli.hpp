#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpbraid::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;    // parse or configuration error
inline constexpr int kDiagnostic = 2;    // NotReduced or resource limit
inline constexpr int kVerifyFailed = 3;  // a transcript step failed

// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace qpbraid::cli
