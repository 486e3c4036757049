#include "multigraph.hpp"

#include <algorithm>
#include <cassert>

#include "error.hpp"

namespace pfd {

void multigraph::require_live(vertex v) const {
  if (!is_live(v))
    throw error(errc::invalid_vertex,
                "vertex " + std::to_string(v) + " is not a live vertex");
}

vertex multigraph::add_vertex() {
  vertex v = next_id_++;
  live_.push_back(1);
  adj_.emplace_back();
  loops_.push_back(0);
  degree_.push_back(0);
  ++n_;
  return v;
}

void multigraph::add_edge(vertex u, vertex v, std::uint32_t count) {
  require_live(u);
  require_live(v);
  if (count == 0)
    throw error(errc::invalid_argument, "edge count must be positive");
  if (u == v) {
    loops_[u] += count;
    degree_[u] += 2ull * count;
  } else {
    adj_[u][v] += count;
    adj_[v][u] += count;
    degree_[u] += count;
    degree_[v] += count;
  }
  m_ += count;
}

void multigraph::set_multiplicity(vertex u, vertex v, std::uint32_t count) {
  require_live(u);
  require_live(v);
  if (u == v) {
    std::uint32_t old = loops_[u];
    loops_[u] = count;
    degree_[u] = degree_[u] - 2ull * old + 2ull * count;
    m_ = m_ - old + count;
    return;
  }
  auto it = adj_[u].find(v);
  std::uint32_t old = it == adj_[u].end() ? 0 : it->second;
  if (count == 0) {
    adj_[u].erase(v);
    adj_[v].erase(u);
  } else {
    adj_[u][v] = count;
    adj_[v][u] = count;
  }
  degree_[u] = degree_[u] - old + count;
  degree_[v] = degree_[v] - old + count;
  m_ = m_ - old + count;
}

void multigraph::delete_vertex(vertex v) {
  require_live(v);
  for (const auto& [w, c] : adj_[v]) {
    adj_[w].erase(v);
    degree_[w] -= c;
    m_ -= c;
  }
  adj_[v].clear();
  m_ -= loops_[v];
  loops_[v] = 0;
  degree_[v] = 0;
  live_[v] = 0;
  --n_;
}

std::pair<vertex, vertex> multigraph::bypass(vertex v) {
  require_live(v);
  if (loops_[v] != 0 || degree_[v] != 2)
    throw error(errc::precondition,
                "bypass requires a loop-free vertex of degree exactly 2");
  vertex u, w;
  const auto& nb = adj_[v];
  if (nb.size() == 1) {
    // two parallel edges to the same neighbor
    assert(nb.begin()->second == 2);
    u = w = nb.begin()->first;
  } else {
    assert(nb.size() == 2);
    auto it = nb.begin();
    u = it->first;
    w = std::next(it)->first;
  }
  delete_vertex(v);
  add_edge(u, w, 1);  // a loop when u == w
  return {u, w};
}

std::uint64_t multigraph::degree(vertex v) const {
  require_live(v);
  return degree_[v];
}

std::uint32_t multigraph::loops_at(vertex v) const {
  require_live(v);
  return loops_[v];
}

std::uint32_t multigraph::multiplicity(vertex u, vertex v) const {
  require_live(u);
  require_live(v);
  if (u == v) return loops_[u];
  auto it = adj_[u].find(v);
  return it == adj_[u].end() ? 0 : it->second;
}

std::vector<vertex> multigraph::vertices() const {
  std::vector<vertex> out;
  out.reserve(n_);
  for (vertex v = 0; v < next_id_; ++v)
    if (live_[v]) out.push_back(v);
  return out;
}

const std::map<vertex, std::uint32_t>& multigraph::neighbors(vertex v) const {
  require_live(v);
  return adj_[v];
}

std::vector<multigraph::edge> multigraph::edge_list() const {
  std::vector<edge> out;
  for (vertex u = 0; u < next_id_; ++u) {
    if (!live_[u]) continue;
    for (const auto& [w, c] : adj_[u])
      if (w > u) out.push_back({u, w, c});
  }
  return out;
}

std::vector<std::pair<vertex, std::uint32_t>> multigraph::loop_list() const {
  std::vector<std::pair<vertex, std::uint32_t>> out;
  for (vertex v = 0; v < next_id_; ++v)
    if (live_[v] && loops_[v] > 0) out.emplace_back(v, loops_[v]);
  return out;
}

std::vector<std::vector<vertex>> multigraph::connected_components() const {
  std::vector<std::vector<vertex>> comps;
  std::vector<std::uint8_t> seen(next_id_, 0);
  std::vector<vertex> stack;
  for (vertex s = 0; s < next_id_; ++s) {
    if (!live_[s] || seen[s]) continue;
    std::vector<vertex> comp;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      vertex u = stack.back();
      stack.pop_back();
      comp.push_back(u);
      for (const auto& [w, c] : adj_[u]) {
        (void)c;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

multigraph multigraph::induced_copy(std::span<const vertex> keep) const {
  for (vertex v : keep) require_live(v);
  std::vector<std::uint8_t> keep_mask(next_id_, 0);
  for (vertex v : keep) keep_mask[v] = 1;
  multigraph out = *this;
  for (vertex v = 0; v < next_id_; ++v)
    if (live_[v] && !keep_mask[v]) out.delete_vertex(v);
  return out;
}

bool multigraph::operator==(const multigraph& other) const {
  if (n_ != other.n_ || m_ != other.m_) return false;
  vertex hi = std::max(next_id_, other.next_id_);
  for (vertex v = 0; v < hi; ++v) {
    bool a = v < next_id_ && live_[v];
    bool b = v < other.next_id_ && other.live_[v];
    if (a != b) return false;
    if (a && (loops_[v] != other.loops_[v] || adj_[v] != other.adj_[v]))
      return false;
  }
  return true;
}

}  // namespace pfd
