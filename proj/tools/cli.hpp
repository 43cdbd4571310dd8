#ifndef HZONO_TOOLS_CLI_HPP_
#define HZONO_TOOLS_CLI_HPP_

#include <iosfwd>

namespace hzono::cli {

// Exit codes of the hzono command.
enum ExitCode : int {
    kOk = 0,
    kNotSharp = 1,
    kParseError = 2,
    kMismatch = 3,
    kLevelOutOfRange = 4,
    kInconclusive = 5,
    kNotPlanar = 6,
    kFailure = 7,
};

// Result data goes to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hzono::cli

#endif  // HZONO_TOOLS_CLI_HPP_
