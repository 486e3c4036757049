#include "oracle.hpp"

#include <algorithm>

#include "error.hpp"

namespace pfd {

namespace {

// Successor in colex order among ascending index tuples over {0..n-1}:
// bump the lowest index with headroom, reset everything below it.
bool colex_next(std::vector<std::uint32_t>& idx, std::uint32_t n) {
  std::size_t s = idx.size();
  for (std::size_t j = 0; j < s; ++j) {
    std::uint32_t limit = (j + 1 < s) ? idx[j + 1] : n;
    if (idx[j] + 1 < limit) {
      idx[j] += 1;
      for (std::size_t i = 0; i < j; ++i) idx[i] = static_cast<std::uint32_t>(i);
      return true;
    }
  }
  return false;
}

void check_enumeration_size(std::uint64_t n, std::uint64_t cap) {
  if (n <= 22) return;
  constexpr std::uint64_t limit = 1ull << 22;
  std::uint64_t sum = 0;
  std::uint64_t c = 1;  // C(n, s), starting at s = 0
  for (std::uint64_t s = 0;;) {
    sum += c;
    if (sum > limit)
      throw error(errc::too_large,
                  "oracle would enumerate more than 2^22 deletion sets");
    if (s == cap) return;
    ++s;
    if (c > UINT64_MAX / (n - s + 1))
      throw error(errc::too_large,
                  "oracle would enumerate more than 2^22 deletion sets");
    c = c * (n - s + 1) / s;
  }
}

// Excess check with a deletion mask, avoiding a graph copy per subset.
bool rpf_after_deletion(const multigraph& g, const std::vector<vertex>& vs,
                        const std::vector<std::uint8_t>& del, std::uint32_t r,
                        std::vector<std::uint8_t>& seen,
                        std::vector<vertex>& stack) {
  std::fill(seen.begin(), seen.end(), 0);
  for (vertex root : vs) {
    if (del[root] || seen[root]) continue;
    std::uint64_t nc = 0, loops = 0, half = 0;
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      vertex u = stack.back();
      stack.pop_back();
      ++nc;
      loops += g.loops_at(u);
      for (const auto& [w, c] : g.neighbors(u)) {
        if (del[w]) continue;
        half += c;
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    std::int64_t excess = static_cast<std::int64_t>(loops + half / 2) -
                          static_cast<std::int64_t>(nc) + 1;
    if (excess > static_cast<std::int64_t>(r)) return false;
  }
  return true;
}

// Shared driver: hands every hit of the first successful size to `emit`,
// which returns false to stop after the first one.
template <typename Emit>
void enumerate_minimum_sets(const multigraph& g, std::uint32_t r,
                            std::int64_t k_cap, Emit emit) {
  if (r < 1)
    throw error(errc::invalid_argument, "r must be at least 1");
  std::vector<vertex> vs = g.vertices();
  std::uint32_t n = static_cast<std::uint32_t>(vs.size());
  std::uint64_t cap = (k_cap < 0 || static_cast<std::uint64_t>(k_cap) > n)
                          ? n
                          : static_cast<std::uint64_t>(k_cap);
  check_enumeration_size(n, cap);
  std::vector<std::uint8_t> del(g.id_limit(), 0);
  std::vector<std::uint8_t> seen(g.id_limit(), 0);
  std::vector<vertex> stack;
  for (std::uint64_t s = 0; s <= cap; ++s) {
    bool any = false;
    std::vector<std::uint32_t> idx(s);
    for (std::uint32_t i = 0; i < s; ++i) idx[i] = i;
    for (;;) {
      for (std::uint32_t i : idx) del[vs[i]] = 1;
      bool hit = rpf_after_deletion(g, vs, del, r, seen, stack);
      if (hit) {
        any = true;
        std::vector<vertex> sol;
        sol.reserve(s);
        for (std::uint32_t i : idx) sol.push_back(vs[i]);
        if (!emit(std::move(sol))) {
          for (std::uint32_t i : idx) del[vs[i]] = 0;
          return;
        }
      }
      for (std::uint32_t i : idx) del[vs[i]] = 0;
      if (s == 0 || !colex_next(idx, n)) break;
    }
    if (any) return;
  }
}

}  // namespace

oracle_result oracle_min_deletion(const multigraph& g, std::uint32_t r,
                                  std::int64_t k_cap) {
  oracle_result res;
  enumerate_minimum_sets(g, r, k_cap, [&res](std::vector<vertex> sol) {
    res.found = true;
    res.opt = static_cast<std::int64_t>(sol.size());
    res.solution = std::move(sol);
    return false;
  });
  return res;
}

std::vector<std::vector<vertex>> oracle_all_min_solutions(const multigraph& g,
                                                          std::uint32_t r,
                                                          std::int64_t k_cap) {
  std::vector<std::vector<vertex>> out;
  enumerate_minimum_sets(g, r, k_cap, [&out](std::vector<vertex> sol) {
    out.push_back(std::move(sol));
    return true;
  });
  return out;
}

}  // namespace pfd
