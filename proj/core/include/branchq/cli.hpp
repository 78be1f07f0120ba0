/* Command-line entry point, kept in the library so tests can drive it
   through in-memory streams. */

#pragma once

#include <iosfwd>

namespace branchq {

// Parses argv and runs one subcommand.  Results go to `out`, diagnostics and
// progress notes to `err`.  Returns 0 on success, 1 on verification failure,
// 2 on usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace branchq
