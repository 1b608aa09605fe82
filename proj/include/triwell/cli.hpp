#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace triwell::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command line (args excludes the program name). Documents go to
/// out or to --output; diagnostics and summaries go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace triwell::cli
