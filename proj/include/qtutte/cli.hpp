#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qtutte {

enum ExitCode : int { kExitOk = 0, kExitOther = 1, kExitParse = 2, kExitAxiom = 3, kExitMismatch = 4 };

/// args excludes the program name. Everything goes to out/err; nothing is
/// read besides the files named by the flags.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtutte
