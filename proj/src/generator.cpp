#include "generator.hpp"

#include "error.hpp"
#include "prng.hpp"

namespace pfd {

namespace {

void check_rates(const gen_spec& spec) {
  if (spec.r < 1)
    throw error(errc::invalid_argument, "r must be at least 1");
  if (spec.loop_rate < 0.0 || spec.loop_rate > 1.0 || spec.multi_rate < 0.0 ||
      spec.multi_rate > 1.0 || spec.loop_rate + spec.multi_rate > 1.0)
    throw error(errc::invalid_argument,
                "loop and multi rates must lie in [0,1] and sum to at most 1");
}

multigraph empty_graph(std::uint32_t n) {
  multigraph g;
  for (std::uint32_t i = 0; i < n; ++i) g.add_vertex();
  return g;
}

}  // namespace

multigraph random_multigraph(const gen_spec& spec) {
  check_rates(spec);
  if (spec.n == 0 && spec.edges > 0)
    throw error(errc::invalid_argument, "cannot place edges without vertices");
  multigraph g = empty_graph(spec.n);
  splitmix64 rng(spec.seed);
  for (std::uint32_t e = 0; e < spec.edges; ++e) {
    double x = rng.unit();
    if (x < spec.loop_rate || spec.n == 1) {
      vertex v = static_cast<vertex>(rng.below(spec.n));
      g.add_edge(v, v, 1);
      continue;
    }
    if (x < spec.loop_rate + spec.multi_rate) {
      auto pairs = g.edge_list();
      if (!pairs.empty()) {
        const auto& pick = pairs[rng.below(pairs.size())];
        g.add_edge(pick.u, pick.v, 1);
        continue;
      }
      // nothing to duplicate yet, fall through to a fresh pair
    }
    vertex u = static_cast<vertex>(rng.below(spec.n));
    vertex v = static_cast<vertex>((u + 1 + rng.below(spec.n - 1)) % spec.n);
    g.add_edge(u, v, 1);
  }
  return g;
}

planted_result planted_instance(const gen_spec& spec) {
  check_rates(spec);
  multigraph g = empty_graph(spec.n);
  splitmix64 rng(spec.seed);
  // random forest, a fresh root with probability 0.12
  for (vertex v = 1; v < spec.n; ++v)
    if (rng.unit() >= 0.12)
      g.add_edge(v, static_cast<vertex>(rng.below(v)), 1);
  // up to r extra edges inside each component keeps the base solvable
  // with zero deletions
  for (const auto& comp : g.connected_components()) {
    std::uint64_t extras = rng.below(spec.r + 1u);
    for (std::uint64_t i = 0; i < extras; ++i) {
      if (rng.unit() < spec.loop_rate || comp.size() == 1) {
        vertex v = comp[rng.below(comp.size())];
        g.add_edge(v, v, 1);
      } else {
        std::uint64_t a = rng.below(comp.size());
        std::uint64_t b = (a + 1 + rng.below(comp.size() - 1)) % comp.size();
        g.add_edge(comp[a], comp[b], 1);
      }
    }
  }
  planted_result out;
  for (std::uint32_t i = 0; i < spec.planted_k; ++i) {
    std::vector<vertex> candidates = g.vertices();
    std::uint64_t existing = g.n();
    vertex p = g.add_vertex();
    std::uint64_t t_base = 4 + existing / 8;
    std::uint64_t t = t_base + rng.below(t_base / 2 + 1);
    if (candidates.empty()) t = 0;
    for (std::uint64_t j = 0; j < t; ++j) {
      // preferential attachment, weight degree + 1
      std::uint64_t total = 0;
      for (vertex w : candidates) total += g.degree(w) + 1;
      std::uint64_t x = rng.below(total);
      vertex chosen = candidates.back();
      for (vertex w : candidates) {
        std::uint64_t weight = g.degree(w) + 1;
        if (x < weight) {
          chosen = w;
          break;
        }
        x -= weight;
      }
      g.add_edge(p, chosen, 1);
    }
    out.planted.push_back(p);
  }
  out.graph = std::move(g);
  return out;
}

}  // namespace pfd
