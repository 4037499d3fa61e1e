#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "tlrc/braid_word.hpp"

namespace tlrc {

/// "1,-2,1" -> letters {1,-2,1}, strands max|letter| + 1 (1 for the empty word).
/// Throws ParseError on a zero, non-integer or empty item.
BraidWord parse_braid_word(std::string_view text);

/// Runs the command line `args` (without the program name). Returns 0 on
/// success, 1 on bad input, 2 when a check suite reports violations.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tlrc
