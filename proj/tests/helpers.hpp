#pragma once

#include <cstdint>
#include <vector>

#include "multigraph.hpp"
#include "recognition.hpp"
#include "reduction.hpp"

// Appends a complete graph on n fresh vertices, returning their ids.
inline std::vector<pfd::vertex> add_complete(pfd::multigraph& g,
                                             std::uint32_t n) {
  std::vector<pfd::vertex> vs;
  for (std::uint32_t i = 0; i < n; ++i) vs.push_back(g.add_vertex());
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = i + 1; j < n; ++j) g.add_edge(vs[i], vs[j], 1);
  return vs;
}

inline pfd::multigraph complete_graph(std::uint32_t n) {
  pfd::multigraph g;
  add_complete(g, n);
  return g;
}

inline std::vector<pfd::vertex> add_cycle(pfd::multigraph& g,
                                          std::uint32_t n) {
  std::vector<pfd::vertex> vs;
  for (std::uint32_t i = 0; i < n; ++i) vs.push_back(g.add_vertex());
  for (std::uint32_t i = 0; i < n; ++i)
    g.add_edge(vs[i], vs[(i + 1) % n], 1);
  return vs;
}

inline pfd::multigraph cycle_graph(std::uint32_t n) {
  pfd::multigraph g;
  add_cycle(g, n);
  return g;
}

inline pfd::multigraph path_graph(std::uint32_t n) {
  pfd::multigraph g;
  std::vector<pfd::vertex> vs;
  for (std::uint32_t i = 0; i < n; ++i) vs.push_back(g.add_vertex());
  for (std::uint32_t i = 0; i + 1 < n; ++i) g.add_edge(vs[i], vs[i + 1], 1);
  return g;
}

// Center is vertex 0.
inline pfd::multigraph star_graph(std::uint32_t leaves) {
  pfd::multigraph g;
  pfd::vertex center = g.add_vertex();
  for (std::uint32_t i = 0; i < leaves; ++i)
    g.add_edge(center, g.add_vertex(), 1);
  return g;
}

// The fixpoint guarantees: multiplicity at most r+2, minimum degree at
// least 3, at most r loops per vertex, and no component that is already
// an r-pseudoforest.
inline bool reduced_invariants_hold(const pfd::instance& inst) {
  const pfd::multigraph& g = inst.graph;
  for (pfd::vertex v : g.vertices()) {
    if (g.degree(v) < 3) return false;
    if (g.loops_at(v) > inst.r) return false;
    for (const auto& [w, mult] : g.neighbors(v))
      if (mult > inst.r + 2) return false;
  }
  for (const auto& ce : pfd::component_excesses(g))
    if (ce.excess <= static_cast<std::int64_t>(inst.r)) return false;
  return true;
}
