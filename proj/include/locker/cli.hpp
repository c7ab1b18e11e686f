#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "locker/bitvec.hpp"

namespace locker::cli {

// Exactly n characters of '0'/'1'; leftmost character is locker 1.
LockerState parse_state(const std::string& text, int n);

// Whitespace- or comma-separated positive integers, order and duplicates
// preserved; "a..b" expands to the inclusive range. Empty text is the
// empty sequence.
MoveSequence parse_moves(const std::string& text);

std::string render_set(const IndexSet& u);

// Dispatch one invocation. `args` excludes the program name.
// Exit codes: 0 success, 1 input or parse error, 2 verify reported a
// failed claim.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locker::cli
