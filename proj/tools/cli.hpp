#pragma once

#include <ostream>

namespace sympow {

/// Entry point of the sympow command; returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sympow
