#include <catch2/catch_amalgamated.hpp>

#include "cind/generators.hpp"
#include "cind/oracle.hpp"
#include "cind/reference.hpp"
#include "cind/solver.hpp"

using namespace cind;

namespace {

// star of pendant capped diamonds around one central block
Graph centered(const BlockKind& center) {
  int cap = attachment_capacity(center);
  BlockDecomposition dec;
  dec.tree = star_graph(cap);
  dec.labels.push_back(center);
  for (int i = 0; i < cap; ++i) dec.labels.push_back({BlockTag::diamond_prime, 0});
  return assemble(dec).graph;
}

}  // namespace

TEST_CASE("solve the two capped diamonds tightly") {
  Graph g = centered({BlockTag::diamond_prime, 0});
  REQUIRE(g.n() == 10);
  SolveCertificate cert = solve(g);
  REQUIRE(cert.order == 7);
  REQUIRE(cert.bound == Rat(7));
  REQUIRE(cert.tight);
  REQUIRE(verify_induced_2_regular(g, cert.subgraph).ok);
}

TEST_CASE("solve handles the closed blocks as special graphs") {
  SolveCertificate k4 = solve(complete_graph(4));
  REQUIRE(k4.order == 3);
  REQUIRE_FALSE(k4.tight);  // the 5/8 guarantee excludes these three graphs

  SolveCertificate k33 = solve(complete_bipartite(3, 3));
  REQUIRE(k33.order == 4);

  SolveCertificate prism = solve(named("Prism"));
  REQUIRE(prism.order == 4);
}

TEST_CASE("solve rejects out-of-scope graphs") {
  REQUIRE_THROWS_AS(solve(petersen()), precondition_error);
  REQUIRE_THROWS_AS(solve(path_graph(4)), precondition_error);
}

TEST_CASE("pattern table matches the exact search") {
  struct Row {
    BlockKind kind;
    int full;
    int minus_y;
  };
  std::vector<Row> rows = {
      {{BlockTag::diamond, 0}, 7, 6},
      {{BlockTag::k33_minus, 0}, 8, 8},
      {{BlockTag::ladder_double_prime, 2}, 8, 8},
      {{BlockTag::ladder_double_prime, 3}, 9, 8},
      {{BlockTag::ladder_double_prime, 4}, 11, 10},
      {{BlockTag::plain_vertex, 0}, 8, 8},
      {{BlockTag::k3, 0}, 9, 8},
      {{BlockTag::k23, 0}, 11, 10},
      {{BlockTag::ladder_prime, 2}, 11, 10},
      {{BlockTag::ladder_prime, 3}, 12, 12},
      {{BlockTag::ladder_prime, 4}, 13, 12},
      {{BlockTag::ladder, 2}, 13, 12},
      {{BlockTag::ladder, 3}, 15, 14},
      {{BlockTag::ladder, 4}, 16, 16},
  };
  for (const auto& row : rows) {
    INFO(kind_to_string(row.kind));
    BlockPlusPattern p = block_plus_pattern(row.kind, 0);
    REQUIRE(p.value_full == row.full);
    REQUIRE(p.value_minus_y == row.minus_y);
    // pattern sets must realize the claimed orders inside the padded block
    REQUIRE(int(p.pattern_full.count()) == row.full);
    REQUIRE(verify_induced_2_regular(p.b_plus, p.pattern_full).ok);
    auto del = delete_vertices(p.b_plus, Bitset::of(p.b_plus.n(), {p.y_vertex}));
    Bitset shifted(del.graph.n());
    bool uses_y = p.pattern_minus_y.test(p.y_vertex);
    REQUIRE_FALSE(uses_y);
    p.pattern_minus_y.for_each([&](int v) { shifted.set(del.old_to_new[v]); });
    REQUIRE(verify_induced_2_regular(del.graph, shifted).ok);
  }
}

TEST_CASE("pattern table is slot independent where symmetry applies") {
  BlockPlusPattern d0 = block_plus_pattern({BlockTag::diamond, 0}, 0);
  BlockPlusPattern d1 = block_plus_pattern({BlockTag::diamond, 0}, 1);
  REQUIRE(d0.value_full == d1.value_full);
  REQUIRE(d0.value_minus_y == d1.value_minus_y);
  for (int s = 0; s < 3; ++s) {
    BlockPlusPattern k = block_plus_pattern({BlockTag::k3, 0}, s);
    REQUIRE(k.value_full == 9);
    REQUIRE(k.value_minus_y == 8);
  }
}

TEST_CASE("every leaf pattern satisfies the induction margin") {
  // resolving a leaf removes n(B+) - 5 vertices and must pay 5/8 of them:
  // full pattern pays from value_full - 4, open-slot pattern from
  // value_minus_y - 3
  for (const auto& kind : std::vector<BlockKind>{
           {BlockTag::diamond, 0},
           {BlockTag::k33_minus, 0},
           {BlockTag::ladder_double_prime, 2},
           {BlockTag::ladder_double_prime, 3},
           {BlockTag::ladder_double_prime, 4},
           {BlockTag::plain_vertex, 0},
           {BlockTag::k3, 0},
           {BlockTag::k23, 0},
           {BlockTag::ladder_prime, 2},
           {BlockTag::ladder_prime, 3},
           {BlockTag::ladder_prime, 4},
           {BlockTag::ladder, 2},
           {BlockTag::ladder, 3},
           {BlockTag::ladder, 4}}) {
    INFO(kind_to_string(kind));
    BlockPlusPattern p = block_plus_pattern(kind, 0);
    Rat need = Rat(5 * (p.b_plus.n() - 5), 8);
    REQUIRE(Rat(p.value_full - 4) >= need);
    REQUIRE(Rat(p.value_minus_y - 3) >= need);
  }
}

TEST_CASE("window reduction splices out three rungs and lifts plus four") {
  Graph g = centered({BlockTag::ladder, 5});
  REQUIRE(g.n() == 30);
  auto L = find_induced_ladder5(g);
  REQUIRE(L.has_value());
  Ladder5Reduction red = reduce_ladder5(g, *L);
  REQUIRE(red.reduced.n() == 24);
  REQUIRE(is_cubic(red.reduced));
  REQUIRE(is_4_chordal(red.reduced));

  SolveCertificate inner = solve(red.reduced);
  Bitset lifted = lift_ladder5(g, red, inner.subgraph);
  REQUIRE(verify_induced_2_regular(g, lifted).ok);
  REQUIRE(int(lifted.count()) == inner.order + 4);

  SolveCertificate whole = solve(g);
  REQUIRE(whole.order >= 20);  // bound is 39/2
  REQUIRE(Rat(whole.order) >= whole.bound);
}

TEST_CASE("window lift handles every frame case") {
  Graph g = centered({BlockTag::ladder, 5});
  auto L = find_induced_ladder5(g);
  Ladder5Reduction red = reduce_ladder5(g, *L);
  // enumerate induced 2-regular sets of the reduced graph hitting distinct
  // frame cases and lift each
  int seen_full = 0, seen_rail = 0, seen_empty = 0;
  auto cycles = enumerate_induced_cycles(red.reduced, 4);
  for (const auto& c : cycles) {
    Bitset s(red.reduced.n());
    for (int v : c.vertices) s.set(v);
    bool a1 = s.test(red.a1), b1 = s.test(red.b1);
    bool a5 = s.test(red.a5), b5 = s.test(red.b5);
    int corners = int(a1) + int(b1) + int(a5) + int(b5);
    Bitset lifted = lift_ladder5(g, red, s);
    REQUIRE(verify_induced_2_regular(g, lifted).ok);
    REQUIRE(lifted.count() == s.count() + 4);
    if (corners == 4) ++seen_full;
    else if (corners == 0) ++seen_empty;
    else ++seen_rail;
  }
  REQUIRE(seen_full >= 1);   // the frame square itself
  REQUIRE(seen_empty >= 1);  // cycles away from the window
  REQUIRE(lift_ladder5(g, red, Bitset(red.reduced.n())).count() == 4);
}

TEST_CASE("capped window reduction works but cannot promise a fixed gain") {
  Graph g = centered({BlockTag::ladder_prime, 4});
  REQUIRE(g.n() == 24);
  auto L = find_induced_ladder4prime(g);
  REQUIRE(L.has_value());
  Ladder4PrimeReduction red = reduce_ladder4prime(g, *L);
  REQUIRE(red.reduced.n() == 20);
  REQUIRE(is_cubic(red.reduced));
  REQUIRE(is_4_chordal(red.reduced));

  // exact values: deleting the window costs two units here, so no lift rule
  // can recover a +3 gain from an optimal reduced solution
  REQUIRE(c_ind_exact(g).value == 16);
  REQUIRE(c_ind_exact(red.reduced).value == 14);

  // every optimum of the reduced graph lifts without any gain
  auto opts = reference::naive_max_induced_regular(red.reduced, 2);
  REQUIRE(opts.value == 14);
  Bitset lifted = lift_ladder4prime(g, red, opts.certificate);
  REQUIRE(verify_induced_2_regular(g, lifted).ok);
  REQUIRE(lifted.count() >= opts.certificate.count());

  // smaller reduced solutions can still gain +3 or +4
  Bitset empty(red.reduced.n());
  REQUIRE(lift_ladder4prime(g, red, empty).count() == 4);
}

TEST_CASE("capped window lift is exercised on all reachable cases") {
  Graph g = centered({BlockTag::ladder_prime, 4});
  auto L = find_induced_ladder4prime(g);
  Ladder4PrimeReduction red = reduce_ladder4prime(g, *L);
  auto cycles = enumerate_induced_cycles(red.reduced, 4);
  for (const auto& c : cycles) {
    Bitset s(red.reduced.n());
    for (int v : c.vertices) s.set(v);
    Bitset lifted = lift_ladder4prime(g, red, s);
    REQUIRE(verify_induced_2_regular(g, lifted).ok);
    REQUIRE(lifted.count() >= s.count());  // never loses vertices
  }
}

TEST_CASE("solver certificates verify on assembled graphs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_4chordal_cubic(2 + int(rng() % 7), rng());
    SolveCertificate cert = solve(g);
    REQUIRE(verify_induced_2_regular(g, cert.subgraph).ok);
    REQUIRE(Rat(cert.order) >= cert.bound);
  }
}

TEST_CASE("tightness check compares solver and exact search") {
  Graph g = generate_extremal(path_graph(2)).graph;
  TightnessReport rep = check_tightness(g);
  REQUIRE(rep.solver_tight);
  REQUIRE(rep.oracle_value == 7);
  REQUIRE(rep.oracle_tight == true);
  REQUIRE(rep.agree);

  // large graph: the exact search is skipped
  Graph big = generate_extremal(path_graph(4)).graph;
  TightnessReport rep2 = check_tightness(big, 24);
  REQUIRE(big.n() == 26);
  REQUIRE(rep2.solver_tight);
  REQUIRE_FALSE(rep2.oracle_value.has_value());
}

TEST_CASE("extremal graphs over small trees are tight") {
  for (const Graph& tree : {path_graph(2), path_graph(3), path_graph(4), star_graph(3)}) {
    Graph g = generate_extremal(tree).graph;
    SolveCertificate cert = solve(g);
    REQUIRE(cert.tight);
    REQUIRE(Rat(cert.order) == five_eighths_bound(g.n()));
  }
}
