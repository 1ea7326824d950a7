#pragma once

// Incidence text format: first non-comment line "P L", then L lines of
// whitespace-separated point indices. '#' starts a comment.

#include "dfsrg/geometry.hpp"

#include <iosfwd>
#include <string>

namespace dfsrg::cli {

/// Throws std::runtime_error with a line number on malformed input, and
/// PreconditionError if the lines do not form a valid incidence structure.
IncidenceStructure read_incidence(std::istream& in);

void write_incidence(std::ostream& out, const IncidenceStructure& inc);

}  // namespace dfsrg::cli
