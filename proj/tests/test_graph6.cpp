#include <catch2/catch_amalgamated.hpp>

#include "cind/generators.hpp"
#include "cind/graph6.hpp"

using namespace cind;

TEST_CASE("graph6 encodes small graphs") {
  REQUIRE(to_graph6(complete_graph(4)) == "C~");
  REQUIRE(to_graph6(build_graph(1, {})) == "@");
  REQUIRE(to_graph6(build_graph(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}})) == "DQc");
}

TEST_CASE("graph6 roundtrips") {
  std::vector<Graph> gs = {petersen(), complete_bipartite(3, 3), cycle_graph(7),
                           path_graph(2), build_graph(3, {})};
  for (const auto& g : gs) {
    Graph back = from_graph6(to_graph6(g));
    REQUIRE(back.n() == g.n());
    REQUIRE(back.edges() == g.edges());
  }
}

TEST_CASE("graph6 long form for 63 or more vertices") {
  Graph big = cycle_graph(70);
  std::string s = to_graph6(big);
  REQUIRE(s[0] == 126);
  Graph back = from_graph6(s);
  REQUIRE(back.n() == 70);
  REQUIRE(back.edges() == big.edges());
}

TEST_CASE("graph6 accepts the optional header and trailing newline") {
  Graph g = from_graph6(">>graph6<<C~\n");
  REQUIRE(g.n() == 4);
  REQUIRE(g.m() == 6);
}

TEST_CASE("graph6 rejects malformed input with byte offsets") {
  REQUIRE_THROWS_AS(from_graph6(""), graph6_error);
  REQUIRE_THROWS_AS(from_graph6("C"), graph6_error);       // truncated bits
  REQUIRE_THROWS_AS(from_graph6("C~~"), graph6_error);     // trailing data
  REQUIRE_THROWS_AS(from_graph6("C\x01"), graph6_error);   // byte out of range
  try {
    from_graph6("C\x01");
    FAIL("expected graph6_error");
  } catch (const graph6_error& e) {
    REQUIRE(e.offset() == 1);
  }
}

TEST_CASE("graph6 rejects nonzero padding bits") {
  // K5 needs 10 data bits, so the final 6-bit group carries 2 padding zeros
  std::string s = to_graph6(complete_graph(5));
  REQUIRE(s == "D~{");
  // set the lowest padding bit inside the 6-bit group: '{' encodes 111100
  s[2] = char(((s[2] - 63) | 1) + 63);
  REQUIRE(s == "D~|");
  REQUIRE_THROWS_AS(from_graph6(s), graph6_error);
}

TEST_CASE("edgelist roundtrip and parse errors") {
  Graph g = petersen();
  Graph back = from_edgelist(to_edgelist(g));
  REQUIRE(back.edges() == g.edges());

  REQUIRE_THROWS_AS(from_edgelist(""), precondition_error);
  REQUIRE_THROWS_AS(from_edgelist("abc\n"), precondition_error);
  REQUIRE_THROWS_AS(from_edgelist("3\n0\n"), precondition_error);
  REQUIRE_THROWS_AS(from_edgelist("3\n0 5\n"), build_error);
}
