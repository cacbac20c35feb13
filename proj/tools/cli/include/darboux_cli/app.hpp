#pragma once

#include <ostream>

namespace darboux::cli {

/// Parses the command line (and an optional --config file) and runs the
/// selected subcommand. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace darboux::cli
