#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace devissage {

inline constexpr char kCliVersion[] = "0.1.0";

/// Run the command-line interface on already-split arguments (no program
/// name).  Writes results to `out` and diagnostics to `err`.  Returns the
/// process exit code: 0 on success, 1 on domain errors (bad input values,
/// budget limits, failed verification), 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace devissage
