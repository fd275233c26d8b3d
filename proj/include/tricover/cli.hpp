#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace tricover::cli {

/// Base point syntax "s=1,t=2"; fiber point "4,0"; direction "1:0".
inline constexpr std::uint64_t kMaxEnumeratedBase = 1'000'000;

/// Runs one command. `args` excludes the program name. Returns 0 on
/// success, 1 when a verification fails and 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Names of all subcommands, in help order.
std::vector<std::string> command_names();

}  // namespace tricover::cli
