#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "multigraph.hpp"

namespace pfd {

struct instance {
  multigraph graph;
  std::uint32_t r = 1;
  std::int64_t k = 0;
};

// Trace events, one per rule firing.  Replaying them on the original
// instance reproduces the reduced one; lifting walks them backwards.
struct component_removed {  // component already an r-pseudoforest
  std::vector<vertex> vertices;
};
struct forced_vertex {  // r+1 or more loops, vertex is in every solution
  vertex v;
};
struct multiplicity_capped {  // non-loop multiplicity capped at r+2
  vertex u, v;
  std::uint32_t old_mult, new_mult;
};
struct low_degree_removed {  // degree at most 1
  vertex v;
};
struct bypassed {  // loop-free degree-2 vertex replaced by edge u-w
  vertex v, u, w;
};

using trace_event = std::variant<component_removed, forced_vertex,
                                 multiplicity_capped, low_degree_removed,
                                 bypassed>;
using reduction_trace = std::vector<trace_event>;

// Each apply_rule_i fires the rule once at its first applicable site
// (components by smallest member, vertices and edge pairs ascending)
// and reports what it did, or nullopt if the rule does not apply.
std::optional<trace_event> apply_rule_1(instance& inst);
std::optional<trace_event> apply_rule_2(instance& inst);
std::optional<trace_event> apply_rule_3(instance& inst);
std::optional<trace_event> apply_rule_4(instance& inst);
std::optional<trace_event> apply_rule_5(instance& inst);

// Rule 6: the budget has gone negative, the instance is a definite no.
bool rule_6_applies(const instance& inst);

struct reduce_result {
  bool definite_no = false;
  instance reduced;
  reduction_trace trace;
  std::array<std::uint64_t, 6> rule_firings{};
};

// Runs rules to a fixpoint, always retrying lower-numbered rules first.
// The fixpoint has multiplicities <= r+2, minimum degree >= 3, and no
// component that is already an r-pseudoforest.
reduce_result reduce(instance inst);

// Mechanically re-applies a trace; used to cross-check reductions.
instance replay_trace(instance original, const reduction_trace& trace);

// Extends a solution of the reduced instance to one of the original
// (adding the forced vertices) and verifies it there.
std::vector<vertex> lift_solution(const multigraph& original, std::uint32_t r,
                                  std::int64_t k_original,
                                  const std::vector<vertex>& reduced_solution,
                                  const reduction_trace& trace);

}  // namespace pfd
