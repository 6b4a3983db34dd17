#include <catch2/catch_amalgamated.hpp>
#include <sstream>

#include "cind/cli.hpp"

using namespace cind;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("cli generates named graphs") {
  auto r = run({"generate", "--name", "K4"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "C~\n");

  auto el = run({"generate", "--name", "K3", "--to", "edgelist"});
  REQUIRE(el.code == 0);
  REQUIRE(el.out == "3\n0 1\n0 2\n1 2\n");

  auto list = run({"generate", "--list"});
  REQUIRE(list.code == 0);
  REQUIRE(list.out.find("Petersen") != std::string::npos);
}

TEST_CASE("cli chordality reads stdin in both formats") {
  auto g6 = run({"chordality"}, "C~\n");
  REQUIRE(g6.code == 0);
  REQUIRE(g6.out == "3\n");

  auto el = run({"chordality"}, "4\n0 1\n1 2\n2 3\n3 0\n");
  REQUIRE(el.code == 0);
  REQUIRE(el.out == "4\n");

  auto forest = run({"chordality"}, "3\n0 1\n");
  REQUIRE(forest.out == "acyclic\n");
}

TEST_CASE("cli classify prints the kind and embedding") {
  auto r = run({"generate", "--name", "Dprime"});
  auto c = run({"classify"}, r.out);
  REQUIRE(c.code == 0);
  REQUIRE(c.out.substr(0, 7) == "Dprime\n");
}

TEST_CASE("cli oracle solves and enforces the size cap") {
  auto pet = run({"generate", "--name", "Petersen"});
  auto r = run({"oracle", "--problem", "cind"}, pet.out);
  REQUIRE(r.code == 0);
  REQUIRE(r.out.substr(0, 2) == "6\n");

  auto refuse = run({"oracle", "--problem", "cind", "--oracle-max-n", "8"}, pet.out);
  REQUIRE(refuse.code == 2);
  REQUIRE(refuse.err.find("exceeds") != std::string::npos);

  auto indep = run({"oracle", "--problem", "independence"}, pet.out);
  REQUIRE(indep.out.substr(0, 2) == "4\n");

  auto budget = run({"oracle", "--problem", "cind", "--budget", "2"}, pet.out);
  REQUIRE(budget.code == 2);
}

TEST_CASE("cli verify distinguishes pass and fail") {
  auto pet = run({"generate", "--name", "Petersen"});
  auto good = run({"verify", "--set", "0,1,2,3,4"}, pet.out);
  REQUIRE(good.code == 0);
  auto bad = run({"verify", "--set", "0,1,2"}, pet.out);
  REQUIRE(bad.code == 1);
  REQUIRE(bad.out.find("fail") != std::string::npos);
  auto junk = run({"verify", "--set", "0,x"}, pet.out);
  REQUIRE(junk.code == 2);
  auto range = run({"verify", "--set", "0,99"}, pet.out);
  REQUIRE(range.code == 2);
}

TEST_CASE("cli solve emits a verified certificate") {
  auto g = run({"generate", "--extremal", "2", "--seed", "1"});
  REQUIRE(g.code == 0);
  auto s = run({"solve"}, g.out);
  REQUIRE(s.code == 0);
  REQUIRE(s.out.find("order 7") != std::string::npos);
  REQUIRE(s.out.find("tight") != std::string::npos);

  auto j = run({"solve", "--json"}, g.out);
  REQUIRE(j.code == 0);
  auto parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed["order"] == 7);
  REQUIRE(parsed["tight"] == true);
}

TEST_CASE("cli decompose and assemble roundtrip") {
  auto g = run({"generate", "--four-chordal", "4", "--seed", "9"});
  REQUIRE(g.code == 0);
  auto d = run({"decompose"}, g.out);
  REQUIRE(d.code == 0);
  auto a = run({"assemble"}, d.out);
  REQUIRE(a.code == 0);
  auto d2 = run({"decompose"}, a.out);
  REQUIRE(d2.code == 0);
  REQUIRE(d2.out == d.out);
}

TEST_CASE("cli greedy reports and passes on cubic graphs") {
  auto g = run({"generate", "--random-cubic", "12", "--seed", "4"});
  auto r = run({"greedy"}, g.out);
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("verdict: pass") != std::string::npos);

  auto j = run({"greedy", "--json"}, g.out);
  auto parsed = nlohmann::json::parse(j.out);
  REQUIRE(parsed["verdict"] == "pass");
}

TEST_CASE("cli experiment emits deterministic csv") {
  auto a = run({"experiment", "--suite", "oracle", "--count", "5", "--n", "10",
                "--seed", "3"});
  REQUIRE(a.code == 0);
  auto b = run({"experiment", "--suite", "oracle", "--count", "5", "--n", "10",
                "--seed", "3"});
  REQUIRE(a.out == b.out);
  REQUIRE(a.out.rfind("suite,id,graph6", 0) == 0);
  REQUIRE(a.err.find("5/5") != std::string::npos);
}

TEST_CASE("cli usage errors exit with code 2") {
  REQUIRE(run({"no-such-command"}).code == 2);
  REQUIRE(run({"generate"}).code == 2);  // no source picked
  REQUIRE(run({"oracle", "--problem", "bogus"}, "C~\n").code == 2);
  REQUIRE(run({"chordality"}, "not a graph6 line\x01\n").code == 2);
  REQUIRE(run({}).code == 2);
}

TEST_CASE("cli help exits zero") {
  REQUIRE(run({"--help"}).code == 0);
  REQUIRE(run({"generate", "--help"}).code == 0);
}
