#pragma once

#include <cstdint>
#include <vector>

#include "multigraph.hpp"

namespace pfd {

// Same seed, same instance, on every platform: the generator only draws
// from the fixed-recurrence engine in prng.hpp.
struct gen_spec {
  std::uint64_t seed = 1;
  std::uint32_t n = 20;
  std::uint32_t edges = 30;  // edge instances to place (random mode)
  double loop_rate = 0.0;
  double multi_rate = 0.0;
  std::uint32_t r = 1;
  std::uint32_t planted_k = 2;
};

// `edges` draws: loop with probability loop_rate, duplicate of an existing
// pair with probability multi_rate, otherwise a uniform distinct pair.
multigraph random_multigraph(const gen_spec& spec);

struct planted_result {
  multigraph graph;
  std::vector<vertex> planted;  // deleting these leaves an r-pseudoforest
};

// A base graph whose every component already fits the budget r, plus
// planted_k heavily wired hub vertices whose removal restores it.
planted_result planted_instance(const gen_spec& spec);

}  // namespace pfd
