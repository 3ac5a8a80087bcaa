#pragma once
// In-process entry point for the command line tool, so tests can drive the
// full argument-to-output path without spawning processes.

#include <iosfwd>

namespace quiverpath::cli {

// Exit codes: 0 success, 1 verification failure, 2 usage or input error.
// Reads JSON payloads from `in` when an input argument is "-".
int run_cli(int argc, const char* const* argv, std::istream& in,
            std::ostream& out, std::ostream& err);

}  // namespace quiverpath::cli
