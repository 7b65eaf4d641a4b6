#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hecke::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int { kOk = 0, kUsage = 1, kPrecondition = 2, kAcceptanceFailed = 3, kInternal = 4 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hecke::cli
