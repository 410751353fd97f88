#pragma once

#include <iosfwd>

namespace hypersimp {

/// Entry point of the `hypersimp` tool. Returns the process exit code:
/// 0 when every requested artifact was written, 1 on runtime errors and the
/// argument parser's code on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypersimp
