#include "reduction.hpp"

#include <algorithm>

#include "error.hpp"
#include "recognition.hpp"

namespace pfd {

std::optional<trace_event> apply_rule_1(instance& inst) {
  for (auto& comp : inst.graph.connected_components()) {
    if (excess_of(inst.graph, comp) > static_cast<std::int64_t>(inst.r))
      continue;
    for (vertex v : comp) inst.graph.delete_vertex(v);
    return trace_event(component_removed{std::move(comp)});
  }
  return std::nullopt;
}

std::optional<trace_event> apply_rule_2(instance& inst) {
  for (vertex v : inst.graph.vertices()) {
    if (inst.graph.loops_at(v) < inst.r + 1u) continue;
    inst.graph.delete_vertex(v);
    inst.k -= 1;
    return trace_event(forced_vertex{v});
  }
  return std::nullopt;
}

std::optional<trace_event> apply_rule_3(instance& inst) {
  std::uint32_t cap = inst.r + 2u;
  for (const auto& e : inst.graph.edge_list()) {
    if (e.mult <= cap) continue;
    inst.graph.set_multiplicity(e.u, e.v, cap);
    return trace_event(multiplicity_capped{e.u, e.v, e.mult, cap});
  }
  return std::nullopt;
}

std::optional<trace_event> apply_rule_4(instance& inst) {
  for (vertex v : inst.graph.vertices()) {
    if (inst.graph.degree(v) > 1) continue;
    inst.graph.delete_vertex(v);
    return trace_event(low_degree_removed{v});
  }
  return std::nullopt;
}

std::optional<trace_event> apply_rule_5(instance& inst) {
  for (vertex v : inst.graph.vertices()) {
    if (inst.graph.degree(v) != 2 || inst.graph.loops_at(v) != 0) continue;
    auto [u, w] = inst.graph.bypass(v);
    return trace_event(bypassed{v, u, w});
  }
  return std::nullopt;
}

bool rule_6_applies(const instance& inst) { return inst.k < 0; }

reduce_result reduce(instance inst) {
  if (inst.r < 1)
    throw error(errc::invalid_argument, "r must be at least 1");
  reduce_result res;
  using rule_fn = std::optional<trace_event> (*)(instance&);
  static constexpr rule_fn rules[5] = {apply_rule_1, apply_rule_2,
                                       apply_rule_3, apply_rule_4,
                                       apply_rule_5};
  for (;;) {
    if (rule_6_applies(inst)) {
      res.rule_firings[5] += 1;
      res.definite_no = true;
      break;
    }
    bool fired = false;
    for (int i = 0; i < 5; ++i) {
      if (auto ev = rules[i](inst)) {
        res.rule_firings[i] += 1;
        res.trace.push_back(std::move(*ev));
        fired = true;
        break;
      }
    }
    if (!fired) break;
  }
  res.reduced = std::move(inst);
  return res;
}

instance replay_trace(instance original, const reduction_trace& trace) {
  for (const auto& ev : trace) {
    std::visit(
        [&](const auto& e) {
          using T = std::decay_t<decltype(e)>;
          if constexpr (std::is_same_v<T, component_removed>) {
            for (vertex v : e.vertices) original.graph.delete_vertex(v);
          } else if constexpr (std::is_same_v<T, forced_vertex>) {
            original.graph.delete_vertex(e.v);
            original.k -= 1;
          } else if constexpr (std::is_same_v<T, multiplicity_capped>) {
            original.graph.set_multiplicity(e.u, e.v, e.new_mult);
          } else if constexpr (std::is_same_v<T, low_degree_removed>) {
            original.graph.delete_vertex(e.v);
          } else {
            auto [u, w] = original.graph.bypass(e.v);
            if (u != e.u || w != e.w)
              throw error(errc::internal, "trace replay diverged at bypass");
          }
        },
        ev);
  }
  return original;
}

std::vector<vertex> lift_solution(const multigraph& original, std::uint32_t r,
                                  std::int64_t k_original,
                                  const std::vector<vertex>& reduced_solution,
                                  const reduction_trace& trace) {
  std::vector<vertex> x = reduced_solution;
  for (const auto& ev : trace)
    if (const auto* f = std::get_if<forced_vertex>(&ev)) x.push_back(f->v);
  std::sort(x.begin(), x.end());
  if (std::adjacent_find(x.begin(), x.end()) != x.end())
    throw error(errc::internal, "lifted solution repeats a vertex");
  if (static_cast<std::int64_t>(x.size()) > k_original)
    throw error(errc::internal, "lifted solution exceeds the budget");
  multigraph rest = original;
  for (vertex v : x) rest.delete_vertex(v);  // throws if v was never live
  if (!is_r_pseudoforest(rest, r))
    throw error(errc::internal, "lifted solution fails verification");
  return x;
}

}  // namespace pfd
