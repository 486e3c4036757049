#pragma once

#include <string>
#include <vector>

#include "reduction.hpp"

namespace pfd {

// Line-oriented instance text:
//   c <comment>
//   p pfd <n> <m> <r> <k>
//   e <u> <v>        (m lines, 1-based, u = v is a loop, repeats accumulate)
instance parse_instance(const std::string& text);

// Renders live vertices relabeled 1..n ascending.  When the relabeling is
// not the identity, `c map <new> <old>` lines document it.
std::string render_instance(const instance& inst);

// One line per event, `RULE<i> <what> <args...>`, 1-based vertex labels.
std::vector<std::string> trace_lines(const reduction_trace& trace);

}  // namespace pfd
