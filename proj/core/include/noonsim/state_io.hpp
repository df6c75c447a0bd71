#pragma once

#include <iosfwd>
#include <string>

#include "noonsim/state.hpp"

namespace noonsim {

// Shortest decimal form with 17 significant digits; round-trips a double
// exactly through strtod. Negative zero prints as "0".
std::string fmt17(double x);

// State file format, line oriented:
//   # comment lines and blank lines are ignored ('#' starts a comment anywhere)
//   N <int>                 header, must precede all entries
//   rho <k> <m> <re> <im>   upper-triangle entry, k <= m
// Unspecified entries are zero; the lower triangle is filled by conjugate
// symmetry. Throws ParseError (with 1-based line number) on malformed input
// and ValidationFailed if the assembled matrix is not a density matrix.
TwoModeNState parse_state_text(const std::string& text);
TwoModeNState parse_state_stream(std::istream& in);
TwoModeNState parse_state_file(const std::string& path);

// Canonical form: header line, then nonzero upper-triangle entries in
// row-major order, floats via fmt17. parse(serialize(s)) == s bitwise.
std::string serialize_state(const TwoModeNState& s);
void write_state_file(const TwoModeNState& s, const std::string& path);

}  // namespace noonsim
