#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace pfd {

using vertex = std::uint32_t;

// Undirected multigraph with loops and edge multiplicities.
//
// Vertex ids are dense non-negative integers handed out by a monotone
// counter; a deleted id is never reused within one graph lifetime. A loop
// counts once in m() and contributes two to the degree of its vertex.
// Non-loop parallel edges are stored as a multiplicity per unordered pair.
// All iteration orders are ascending by id, which keeps every algorithm
// built on top deterministic.
//
// Not safe for concurrent mutation; independent copies may be used from
// different threads.
class multigraph {
public:
  struct edge {
    vertex u, v;  // u < v
    std::uint32_t mult;
    bool operator==(const edge&) const = default;
  };

  // Returns a fresh id with degree 0.
  vertex add_vertex();

  // Adds `count` parallel edges between u and v (loops when u == v).
  void add_edge(vertex u, vertex v, std::uint32_t count = 1);

  // Overwrites the multiplicity of the pair {u,v} (loop count when u == v);
  // 0 removes the pair entirely.
  void set_multiplicity(vertex u, vertex v, std::uint32_t count);

  // Removes v together with all incident edges and loops.
  void delete_vertex(vertex v);

  // Deletes a loop-free degree-2 vertex and adds one edge between its two
  // edge endpoints, even if they coincide (then a loop is created) or are
  // already adjacent (then the multiplicity grows). Returns the joined
  // endpoints. n drops by 1 and m drops by 1.
  std::pair<vertex, vertex> bypass(vertex v);

  bool is_live(vertex v) const noexcept {
    return v < next_id_ && live_[v] != 0;
  }
  std::uint64_t degree(vertex v) const;
  std::uint32_t loops_at(vertex v) const;
  std::uint32_t multiplicity(vertex u, vertex v) const;
  std::uint32_t n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return m_; }
  vertex id_limit() const noexcept { return next_id_; }

  // Live vertex ids, ascending.
  std::vector<vertex> vertices() const;

  // Non-loop adjacency of v: neighbor -> multiplicity, ascending by id.
  const std::map<vertex, std::uint32_t>& neighbors(vertex v) const;

  // Non-loop edges as ascending (min, max) pairs.
  std::vector<edge> edge_list() const;

  // (vertex, loop count) pairs with positive count, ascending.
  std::vector<std::pair<vertex, std::uint32_t>> loop_list() const;

  // Partition of the live vertices into connected components. Loops and
  // multiplicities do not affect connectivity. Components are ordered by
  // smallest member, members ascending.
  std::vector<std::vector<vertex>> connected_components() const;

  // Fresh graph holding exactly the vertices of `keep` (ids preserved) and
  // all edges and loops of this graph with both endpoints in `keep`.
  multigraph induced_copy(std::span<const vertex> keep) const;

  // Structural equality on the live part: same live ids, loop counts and
  // multiplicities. Allocation history (id_limit) is not compared.
  bool operator==(const multigraph& other) const;

private:
  void require_live(vertex v) const;

  std::vector<std::uint8_t> live_;
  std::vector<std::map<vertex, std::uint32_t>> adj_;  // non-loop edges
  std::vector<std::uint32_t> loops_;
  std::vector<std::uint64_t> degree_;
  vertex next_id_ = 0;
  std::uint32_t n_ = 0;
  std::uint64_t m_ = 0;
};

}  // namespace pfd
