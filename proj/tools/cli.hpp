#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace envelope::cli {

// Exit codes of the envelope tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIrrelevant = 2;
inline constexpr int kExitNoSolution = 3;
inline constexpr int kExitNoBracket = 4;
// `reproduce` found a value outside its tolerance.
inline constexpr int kExitMismatch = 5;

/// Runs the tool on `args` (without the program name). Reports go to `out`
/// unless --output is given, diagnostics always go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace envelope::cli
