#pragma once

#include <cstdint>
#include <vector>

#include "multigraph.hpp"

namespace pfd {

struct oracle_result {
  bool found = false;
  std::int64_t opt = -1;
  std::vector<vertex> solution;  // first minimum in enumeration order
};

// Brute-force reference: tries deletion sets by growing size, sets of one
// size in colexicographic order over the ascending vertex list.  A cap of
// -1 means no cap.  Refuses inputs whose enumeration would be too big
// (more than 22 vertices and more than 2^22 candidate sets).
oracle_result oracle_min_deletion(const multigraph& g, std::uint32_t r,
                                  std::int64_t k_cap = -1);

// Every minimum deletion set (within the cap), in enumeration order.
std::vector<std::vector<vertex>> oracle_all_min_solutions(
    const multigraph& g, std::uint32_t r, std::int64_t k_cap = -1);

}  // namespace pfd
