#pragma once

#include <iosfwd>

namespace aoposet::cli {

enum ExitCode : int {
  kOk = 0,
  kParseError = 1,  // also bad arguments and other library errors
  kCycle = 2,
  kNodeLimit = 3,
  kCheckFailed = 4,
};

/// Whole command line, argv[0] included. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace aoposet::cli
