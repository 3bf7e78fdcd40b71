#pragma once

#include <ostream>

namespace nisat::cli {

// Exit codes. 10/20 follow the SAT competition convention.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitInterlaced = 2;
inline constexpr int kExitFatalFinding = 3;
inline constexpr int kExitSat = 10;
inline constexpr int kExitUnsat = 20;

/// Runs one subcommand. The JSON document goes to `out` (or --out), human
/// diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nisat::cli
