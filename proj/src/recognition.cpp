#include "recognition.hpp"

#include "error.hpp"

namespace pfd {

std::int64_t excess_of(const multigraph& g, const std::vector<vertex>& comp) {
  std::uint64_t loops = 0;
  std::uint64_t endpoint_sum = 0;  // counts each non-loop edge twice
  for (vertex v : comp) {
    loops += g.loops_at(v);
    endpoint_sum += g.degree(v) - 2ull * g.loops_at(v);
  }
  std::uint64_t edges = endpoint_sum / 2 + loops;
  return static_cast<std::int64_t>(edges) -
         static_cast<std::int64_t>(comp.size()) + 1;
}

std::vector<component_excess> component_excesses(const multigraph& g) {
  std::vector<component_excess> out;
  for (auto& comp : g.connected_components()) {
    std::int64_t x = excess_of(g, comp);
    out.push_back({std::move(comp), x});
  }
  return out;
}

bool is_r_pseudoforest(const multigraph& g, std::uint32_t r) {
  if (r < 1)
    throw error(errc::invalid_argument, "r must be at least 1");
  for (const auto& ce : component_excesses(g))
    if (ce.excess > static_cast<std::int64_t>(r)) return false;
  return true;
}

}  // namespace pfd
