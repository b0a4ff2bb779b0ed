#pragma once

#include <ostream>

namespace charlab {

/// Runs the command line tool: one JSON document on `out`, log lines on `err`.
/// Returns the process exit code (0 ok, 1 counterexample or inconsistency, 2 usage,
/// 3 singular evaluation).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace charlab
