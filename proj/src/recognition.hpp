#pragma once

#include <cstdint>
#include <vector>

#include "multigraph.hpp"

namespace pfd {

// Cyclomatic excess of one connected component: edges - vertices + 1.
// A component is a forest plus exactly `excess` extra edges, so the whole
// graph is an r-pseudoforest iff every component has excess <= r.
struct component_excess {
  std::vector<vertex> vertices;  // ascending
  std::int64_t excess;
};

// One entry per component, ordered by smallest member.
std::vector<component_excess> component_excesses(const multigraph& g);

std::int64_t excess_of(const multigraph& g, const std::vector<vertex>& comp);

bool is_r_pseudoforest(const multigraph& g, std::uint32_t r);

}  // namespace pfd
