#include <catch2/catch_amalgamated.hpp>

#include "cind/generators.hpp"
#include "cind/oracle.hpp"
#include "cind/reference.hpp"

using namespace cind;

TEST_CASE("largest induced 2-regular subgraph, exact") {
  REQUIRE(c_ind_exact(complete_graph(4)).value == 3);
  REQUIRE(c_ind_exact(complete_bipartite(3, 3)).value == 4);
  REQUIRE(c_ind_exact(named("Prism")).value == 4);
  REQUIRE(c_ind_exact(named("Dprime")).value == 4);
  REQUIRE(c_ind_exact(petersen()).value == 6);
  REQUIRE(c_ind_exact(crossed_prism(6)).value == 6);
}

TEST_CASE("exact certificates are lexicographically least optima") {
  auto res = c_ind_exact(petersen());
  REQUIRE(res.certificate == Bitset::of(10, {0, 1, 2, 3, 5, 8}));
  auto k4 = c_ind_exact(complete_graph(4));
  REQUIRE(k4.certificate == Bitset::of(4, {0, 1, 2}));
  auto k33 = c_ind_exact(complete_bipartite(3, 3));
  REQUIRE(k33.certificate == Bitset::of(6, {0, 1, 3, 4}));
}

TEST_CASE("independence number") {
  REQUIRE(independence_number(petersen()).value == 4);
  REQUIRE(independence_number(complete_bipartite(3, 3)).value == 3);
  REQUIRE(independence_number(cycle_graph(5)).value == 2);
  REQUIRE(independence_number(complete_graph(4)).value == 1);
}

TEST_CASE("induced s-regular maxima") {
  REQUIRE(max_induced_regular(complete_graph(4), 1).value == 2);
  REQUIRE(max_induced_regular(complete_bipartite(3, 3), 0).value == 3);
  REQUIRE(max_induced_regular(petersen(), 1).value == 6);  // perfect matching
  REQUIRE(max_induced_regular(petersen(), 2).value == 6);
  REQUIRE_THROWS_AS(max_induced_regular(petersen(), -1), precondition_error);
}

TEST_CASE("mixed vertex-edge-cycle maxima") {
  REQUIRE(max_mixed_regular(cycle_graph(6)).value == 6);
  REQUIRE(max_mixed_regular(complete_graph(4)).value == 3);
  // deleting the dominating set {0,2,6} leaves an induced C6 plus an
  // isolated vertex, so the optimum is 7, one above 3n/5
  auto mixed = max_mixed_regular(petersen());
  REQUIRE(mixed.value == 7);
  REQUIRE(mixed.value == reference::naive_max_mixed_regular(petersen()).value);
}

TEST_CASE("fair domination of regular graphs") {
  REQUIRE(fair_domination_number_regular(petersen()).value == 4);
  REQUIRE(fair_domination_number_regular(cycle_graph(5)).value == 3);
  REQUIRE(fair_domination_number_regular(complete_graph(4)).value == 1);
  Graph p3 = path_graph(3);
  REQUIRE_THROWS_AS(fair_domination_number_regular(p3), precondition_error);
}

TEST_CASE("search budget is enforced") {
  OracleOptions opt;
  opt.budget = 3;
  REQUIRE_THROWS_AS(c_ind_exact(petersen(), opt), budget_error);
}

TEST_CASE("branch and bound matches exhaustive enumeration") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 4 + int(rng() % 9);  // up to 12
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) edges.emplace_back(u, v);
    Graph g = build_graph(n, edges);

    for (int s = 0; s <= 3; ++s) {
      auto fast = max_induced_regular(g, s);
      auto slow = reference::naive_max_induced_regular(g, s);
      REQUIRE(fast.value == slow.value);
      REQUIRE(fast.certificate == slow.certificate);
    }
    auto fm = max_mixed_regular(g);
    auto sm = reference::naive_max_mixed_regular(g);
    REQUIRE(fm.value == sm.value);
    REQUIRE(fm.certificate == sm.certificate);
    REQUIRE(independence_number(g).value ==
            reference::naive_independence_number(g).value);
    REQUIRE(c_ind_exact(g).value == reference::naive_c_ind(g).value);
  }
}

TEST_CASE("fair domination matches the reference on cubic graphs") {
  for (unsigned long long seed = 1; seed <= 6; ++seed) {
    Graph g = random_cubic_connected(10, seed);
    auto fast = fair_domination_number_regular(g);
    auto slow = reference::naive_fair_domination_regular(g);
    REQUIRE(fast.value == slow.value);
  }
}
