#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace exclugraph {

inline constexpr const char* kToolkitVersion = "0.1.0";

inline constexpr int kExitOk = 0;
inline constexpr int kExitParameter = 2;
inline constexpr int kExitNumerical = 3;

// Runs the command line `args` (args[0] is the program name). Reports go to
// `out`, diagnostics and usage to `err`. Returns the process exit status.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace exclugraph
