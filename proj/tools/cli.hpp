#ifndef MHG_TOOLS_CLI_HPP
#define MHG_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace mhg::cli {

// Exit codes beyond 0 (success) and 1 (other failure).
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPole = 3;
inline constexpr int kExitResource = 4;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mhg::cli

#endif
