#pragma once

#include <iosfwd>

namespace goesv::cli {

/// Parses argv and runs one subcommand. Results go to `out` unless an
/// output file is chosen (--output, or GOESV_OUT_DIR). Exit codes: 0 all
/// checks pass, 1 a check failed or a numeric error occurred, 2 bad usage.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace goesv::cli
