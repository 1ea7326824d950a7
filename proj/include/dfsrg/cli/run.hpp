#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dfsrg::cli {

/// Runs one command line (args excludes the program name). Writes a single
/// JSON report (or graph6 for `build`) to `out` and diagnostics to `err`.
/// Returns 0 when no asserted check failed, 1 when one did, 2 on usage or
/// input errors; usage errors write nothing to `out`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dfsrg::cli
