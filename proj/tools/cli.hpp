#pragma once

#include <ostream>

namespace friezelab::cli {

/// Runs one command line. Returns 0 on success, 1 on a module error (an error
/// object is written) and 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace friezelab::cli
