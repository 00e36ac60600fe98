#pragma once

#include <iosfwd>

namespace orenorm {

/// Runs the `orenorm` command line. Returns 0 on success, 2 for an inconclusive verdict
/// and 1 on errors (failed verification included).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace orenorm
