#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twoatom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvariant = 2;

// Entry point of the `twoatom` tool. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twoatom::cli
