#ifndef RRCODES_TOOLS_CLI_HPP
#define RRCODES_TOOLS_CLI_HPP

#include <ostream>

namespace rrcodes::cli {

// Exit codes: 0 success (findings allowed), 1 verification failure, 2 usage error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rrcodes::cli

#endif  // RRCODES_TOOLS_CLI_HPP
