#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rowcomplex {
namespace cli {

/// Exit codes of the command-line front end.
enum ExitCode {
    kOk = 0,
    kUsage = 1,
    kBadInput = 2,
    kGuard = 3,
};

/// Runs one invocation. args excludes the program name. All diagnostics go
/// to err; results go to out.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace cli
}  // namespace rowcomplex
