#pragma once

#include <iosfwd>

namespace commevo {

// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_io = 2;      // unreadable/unwritable file, parse error, empty graph
inline constexpr int exit_config = 3;  // bad flags, infeasible spec, node-set mismatch

// Entry point shared by the executable and the tests. Primary output goes to
// `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace commevo
