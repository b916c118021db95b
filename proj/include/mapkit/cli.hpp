#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mapkit {

// Exit codes: 0 success, 2 usage error, 3 invalid input, 4 oracle mismatch.
// Subcommands: validate, decompose, solve, gen, bench. Seeds default to the
// MAPKIT_SEED environment variable; an explicit --seed flag wins.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mapkit
