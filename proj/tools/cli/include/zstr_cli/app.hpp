#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "zstr_cli/settings.hpp"

namespace zstr::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (without the program name). Results go to out or
/// the --output file, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, const EnvLookup& env);

}  // namespace zstr::cli
