#pragma once

#include <iosfwd>

namespace chisini_cli {

/// Full command-line driver, shared by the binary and the tests. Writes the
/// record (text or JSON) to `out`, diagnostics to `err`, and returns the
/// process exit code: 0 on success, 1 on a usage error, 2 when a computation
/// refuses its input (the fault name is printed).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace chisini_cli
