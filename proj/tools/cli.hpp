#pragma once

#include <iosfwd>

namespace xmscarf::cli {

/// Runs the command line and returns the exit status: 0 success, 1 numerical
/// or verification failure, 2 usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace xmscarf::cli
