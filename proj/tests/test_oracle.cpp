#include <algorithm>
#include <vector>

#include "doctest.h"
#include "error.hpp"
#include "helpers.hpp"
#include "oracle.hpp"

using pfd::multigraph;
using pfd::vertex;

TEST_CASE("oracle optimum on anchors") {
  auto k4 = pfd::oracle_min_deletion(complete_graph(4), 1);
  CHECK(k4.found);
  CHECK(k4.opt == 1);

  auto forest = pfd::oracle_min_deletion(path_graph(6), 1);
  CHECK(forest.found);
  CHECK(forest.opt == 0);
  CHECK(forest.solution.empty());

  auto k5 = pfd::oracle_min_deletion(complete_graph(5), 1);
  CHECK(k5.found);
  CHECK(k5.opt == 2);
}

TEST_CASE("the cap limits the search") {
  CHECK_FALSE(pfd::oracle_min_deletion(complete_graph(5), 1, 1).found);
  CHECK(pfd::oracle_min_deletion(complete_graph(5), 1, 2).found);
  CHECK(pfd::oracle_min_deletion(complete_graph(5), 1, 0).found == false);
  auto zero = pfd::oracle_min_deletion(cycle_graph(4), 1, 0);
  CHECK(zero.found);
  CHECK(zero.opt == 0);
}

TEST_CASE("all minimum solutions of K4 are the four singletons") {
  auto all = pfd::oracle_all_min_solutions(complete_graph(4), 1);
  REQUIRE(all.size() == 4);
  for (vertex v = 0; v < 4; ++v)
    CHECK(all[v] == std::vector<vertex>{v});
}

TEST_CASE("a triangle's only minimum solution is empty") {
  auto all = pfd::oracle_all_min_solutions(cycle_graph(3), 1);
  REQUIRE(all.size() == 1);
  CHECK(all[0].empty());
}

TEST_CASE("two disjoint K4 give all sixteen cross pairs") {
  multigraph g;
  auto a = add_complete(g, 4);
  auto b = add_complete(g, 4);
  auto all = pfd::oracle_all_min_solutions(g, 1);
  REQUIRE(all.size() == 16);
  for (const auto& sol : all) {
    REQUIRE(sol.size() == 2);
    bool in_a = std::find(a.begin(), a.end(), sol[0]) != a.end();
    bool in_b = std::find(b.begin(), b.end(), sol[1]) != b.end();
    CHECK(in_a);
    CHECK(in_b);
  }
}

TEST_CASE("solutions of one size come out in colex order") {
  // on K5 at r=1 every pair works and nothing smaller does
  auto all = pfd::oracle_all_min_solutions(complete_graph(5), 1);
  std::vector<std::vector<vertex>> expected = {
      {0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3},
      {2, 3}, {0, 4}, {1, 4}, {2, 4}, {3, 4}};
  CHECK(all == expected);

  auto first = pfd::oracle_min_deletion(complete_graph(5), 1);
  CHECK(first.solution == std::vector<vertex>{0, 1});
}

TEST_CASE("enumeration guard refuses unbounded large inputs") {
  multigraph big = complete_graph(23);
  CHECK_THROWS_AS(pfd::oracle_min_deletion(big, 1), pfd::error);
  CHECK_THROWS_AS(pfd::oracle_all_min_solutions(big, 1), pfd::error);
  // a tight cap keeps the same input enumerable
  auto capped = pfd::oracle_min_deletion(big, 1, 1);
  CHECK_FALSE(capped.found);
}

TEST_CASE("oracle rejects r below 1") {
  CHECK_THROWS_AS(pfd::oracle_min_deletion(complete_graph(3), 0), pfd::error);
}

TEST_CASE("oracle works on graphs with dead ids") {
  multigraph g = complete_graph(5);
  g.delete_vertex(2);  // leaves K4 on ids {0,1,3,4}
  auto res = pfd::oracle_min_deletion(g, 1);
  CHECK(res.found);
  CHECK(res.opt == 1);
  CHECK(res.solution == std::vector<vertex>{0});
}
