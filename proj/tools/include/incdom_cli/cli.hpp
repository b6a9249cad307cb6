#pragma once
// The `incdom` command line as a library, so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace incdom::cli {

enum ExitCode : int {
    kOk = 0,
    kVerifyFailed = 1,
    kBudget = 2,
    kUsage = 64,
    kDomain = 65,
    kParse = 66,
    kInternal = 70,
};

/// Environment variable naming a directory for relative output paths.
inline constexpr const char* kOutputDirEnv = "INCDOM_OUTPUT_DIR";

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incdom::cli
