#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "reduction.hpp"

namespace pfd {

struct solver_stats {
  std::uint64_t branch_nodes = 0;    // branching recursion entries, root too
  std::uint64_t fallback_calls = 0;  // exhaustive-search recursion entries
  std::uint32_t peak_depth = 0;      // deepest branching recursion level
  std::array<std::uint64_t, 6> rule_firings{};
  void merge(const solver_stats& other);
};

struct decision_result {
  bool answer = false;
  std::vector<vertex> solution;  // ascending, verified; meaningful when yes
  solver_stats stats;
};

struct minimize_result {
  bool found = false;
  std::int64_t opt = -1;
  std::vector<vertex> solution;
  solver_stats stats;  // from the successful budget, or the last one tried
};

// The up to `limit` highest-degree vertices, ties broken by smaller id.
std::vector<vertex> top_degree_set(const multigraph& g, std::uint64_t limit);

// (10k+1)^k, saturating at UINT64_MAX; branch_nodes never exceeds this.
std::uint64_t node_bound(std::int64_t k);

// Exact decision: can deleting at most k vertices leave a graph whose
// components each need at most r edge removals to become forests?
// threads > 1 parallelizes the root branching in deterministic batches;
// the answer and solution never depend on the thread count.
decision_result solve_decision(const instance& inst, unsigned threads = 1);

// Smallest deletion set of size at most kmax, found by growing budgets.
minimize_result solve_minimize(const multigraph& g, std::uint32_t r,
                               std::int64_t kmax, unsigned threads = 1);

}  // namespace pfd
