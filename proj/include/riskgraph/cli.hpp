#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace riskgraph::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitUsage = 3;

// Runs one subcommand. args excludes the program name. Artifact content
// goes to out, diagnostics to err; identical args and input files produce
// byte-identical output.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace riskgraph::cli
