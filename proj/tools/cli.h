// Command-line driver, callable in-process for testing.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lpbn::cli {

enum ExitCode : int {
    ok             = 0,
    inputError     = 1,
    budgetExceeded = 2,
    soundnessBug   = 3,
};

/// `args` excludes the program name. `budgetEnv` is the value of
/// LPBN_BUDGET, or null.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        const char* budgetEnv = nullptr);

} // namespace lpbn::cli
