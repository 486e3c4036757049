#include "solver.hpp"

#include <algorithm>
#include <future>
#include <optional>

#include "error.hpp"
#include "recognition.hpp"

namespace pfd {

void solver_stats::merge(const solver_stats& other) {
  branch_nodes += other.branch_nodes;
  fallback_calls += other.fallback_calls;
  peak_depth = std::max(peak_depth, other.peak_depth);
  for (int i = 0; i < 6; ++i) rule_firings[i] += other.rule_firings[i];
}

std::vector<vertex> top_degree_set(const multigraph& g, std::uint64_t limit) {
  std::vector<vertex> vs = g.vertices();
  std::sort(vs.begin(), vs.end(), [&g](vertex a, vertex b) {
    std::uint64_t da = g.degree(a), db = g.degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  if (vs.size() > limit) vs.resize(limit);
  return vs;
}

std::uint64_t node_bound(std::int64_t k) {
  if (k <= 0) return 1;
  std::uint64_t base = 10ull * static_cast<std::uint64_t>(k) + 1ull;
  std::uint64_t out = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (out > UINT64_MAX / base) return UINT64_MAX;
    out *= base;
  }
  return out;
}

namespace {

void add_firings(solver_stats& stats, const reduce_result& red) {
  for (int i = 0; i < 6; ++i) stats.rule_firings[i] += red.rule_firings[i];
}

std::vector<vertex> degree_order(const multigraph& g,
                                 std::vector<vertex> vs) {
  std::sort(vs.begin(), vs.end(), [&g](vertex a, vertex b) {
    std::uint64_t da = g.degree(a), db = g.degree(b);
    if (da != db) return da > db;
    return a < b;
  });
  return vs;
}

// Exhaustive exact search used once the graph is small relative to the
// budget.  Every component of a reduced graph still needs a deletion, so
// trying each vertex of one component is a complete case split.
std::optional<std::vector<vertex>> fallback_search(const instance& inst,
                                                   solver_stats& stats) {
  stats.fallback_calls += 1;
  reduce_result red = reduce(inst);
  add_firings(stats, red);
  if (red.definite_no) return std::nullopt;
  const multigraph& g = red.reduced.graph;
  if (g.n() == 0)
    return lift_solution(inst.graph, inst.r, inst.k, {}, red.trace);
  if (red.reduced.k <= 0) return std::nullopt;
  auto comps = g.connected_components();
  for (vertex u : degree_order(g, comps.front())) {
    instance child{g, red.reduced.r, red.reduced.k - 1};
    child.graph.delete_vertex(u);
    if (auto sub = fallback_search(child, stats)) {
      sub->push_back(u);
      std::sort(sub->begin(), sub->end());
      return lift_solution(inst.graph, inst.r, inst.k, *sub, red.trace);
    }
  }
  return std::nullopt;
}

std::optional<std::vector<vertex>> decide(const instance& inst,
                                          std::uint32_t depth,
                                          solver_stats& stats) {
  stats.branch_nodes += 1;
  stats.peak_depth = std::max(stats.peak_depth, depth);
  if (is_r_pseudoforest(inst.graph, inst.r)) return std::vector<vertex>{};
  if (inst.k <= 0) return std::nullopt;
  reduce_result red = reduce(inst);
  add_firings(stats, red);
  if (red.definite_no) return std::nullopt;
  const instance& ri = red.reduced;
  if (ri.graph.n() == 0)
    return lift_solution(inst.graph, inst.r, inst.k, {}, red.trace);
  if (ri.k <= 0) return std::nullopt;
  if (ri.graph.n() <= 51ull * static_cast<std::uint64_t>(ri.k)) {
    if (auto sub = fallback_search(ri, stats))
      return lift_solution(inst.graph, inst.r, inst.k, *sub, red.trace);
    return std::nullopt;
  }
  // Large reduced graphs always have a solution touching the highest
  // degrees, so branching there stays exact.
  for (vertex u :
       top_degree_set(ri.graph, 10ull * static_cast<std::uint64_t>(ri.k))) {
    instance child{ri.graph, ri.r, ri.k - 1};
    child.graph.delete_vertex(u);
    if (auto sub = decide(child, depth + 1, stats)) {
      sub->push_back(u);
      std::sort(sub->begin(), sub->end());
      return lift_solution(inst.graph, inst.r, inst.k, *sub, red.trace);
    }
  }
  return std::nullopt;
}

decision_result solve_parallel_root(const instance& inst, unsigned threads) {
  decision_result res;
  res.stats.branch_nodes += 1;
  if (is_r_pseudoforest(inst.graph, inst.r)) {
    res.answer = true;
    return res;
  }
  if (inst.k <= 0) return res;
  reduce_result red = reduce(inst);
  add_firings(res.stats, red);
  if (red.definite_no) return res;
  const instance& ri = red.reduced;
  if (ri.graph.n() == 0) {
    res.solution = lift_solution(inst.graph, inst.r, inst.k, {}, red.trace);
    res.answer = true;
    return res;
  }
  if (ri.k <= 0) return res;
  if (ri.graph.n() <= 51ull * static_cast<std::uint64_t>(ri.k)) {
    if (auto sub = fallback_search(ri, res.stats)) {
      res.solution =
          lift_solution(inst.graph, inst.r, inst.k, *sub, red.trace);
      res.answer = true;
    }
    return res;
  }
  auto branch_set =
      top_degree_set(ri.graph, 10ull * static_cast<std::uint64_t>(ri.k));
  // Fixed-size batches keep the statistics reproducible for a given
  // thread count; every batch member is finished and merged in branch
  // order, and the first success in that order wins, so the solution
  // matches the sequential one.
  for (std::size_t base = 0; base < branch_set.size() && !res.answer;
       base += threads) {
    std::size_t end = std::min<std::size_t>(base + threads, branch_set.size());
    using branch_outcome =
        std::pair<std::optional<std::vector<vertex>>, solver_stats>;
    std::vector<std::future<branch_outcome>> futures;
    for (std::size_t i = base; i < end; ++i) {
      vertex u = branch_set[i];
      futures.push_back(std::async(std::launch::async, [&ri, u]() {
        solver_stats st;
        instance child{ri.graph, ri.r, ri.k - 1};
        child.graph.delete_vertex(u);
        auto sub = decide(child, 1, st);
        return branch_outcome{std::move(sub), st};
      }));
    }
    for (std::size_t i = base; i < end; ++i) {
      auto [sub, st] = futures[i - base].get();
      res.stats.merge(st);
      if (sub && !res.answer) {
        sub->push_back(branch_set[i]);
        std::sort(sub->begin(), sub->end());
        res.solution =
            lift_solution(inst.graph, inst.r, inst.k, *sub, red.trace);
        res.answer = true;
      }
    }
  }
  return res;
}

}  // namespace

decision_result solve_decision(const instance& inst, unsigned threads) {
  if (inst.r < 1)
    throw error(errc::invalid_argument, "r must be at least 1");
  if (inst.k < 0)
    throw error(errc::invalid_argument, "budget must be nonnegative");
  if (threads == 0)
    throw error(errc::invalid_argument, "threads must be at least 1");
  if (threads > 1) return solve_parallel_root(inst, threads);
  decision_result res;
  if (auto x = decide(inst, 0, res.stats)) {
    res.answer = true;
    res.solution = std::move(*x);
  }
  return res;
}

minimize_result solve_minimize(const multigraph& g, std::uint32_t r,
                               std::int64_t kmax, unsigned threads) {
  if (kmax < 0)
    throw error(errc::invalid_argument, "kmax must be nonnegative");
  minimize_result res;
  for (std::int64_t k = 0; k <= kmax; ++k) {
    decision_result d = solve_decision({g, r, k}, threads);
    res.stats = std::move(d.stats);
    if (d.answer) {
      if (static_cast<std::int64_t>(d.solution.size()) != k)
        throw error(errc::internal,
                    "budget " + std::to_string(k) +
                        " succeeded below an already refuted size");
      res.found = true;
      res.opt = k;
      res.solution = std::move(d.solution);
      return res;
    }
  }
  return res;
}

}  // namespace pfd
