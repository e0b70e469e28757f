#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trigfour {

/// Entry point behind the trigfour binary. Executes one subcommand, writing
/// results to out and diagnostics to err. Returns 0 on success, 1 on
/// verification failure, 2 on usage or domain errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace trigfour
