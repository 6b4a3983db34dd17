#pragma once

// Command line front end. run_cli is stream-parameterised so the test suite
// can drive it in-process; tools/cind.cpp wires it to the real stdio.
//
// Exit codes: 0 success (and every checked verdict passed), 1 at least one
// verdict failed, 2 usage or input error (including internal consistency
// failures, which indicate a bug rather than a negative result).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cind/blocktree.hpp"
#include "cind/classify.hpp"
#include "cind/experiments.hpp"
#include "cind/generators.hpp"
#include "cind/graph6.hpp"
#include "cind/greedy.hpp"
#include "cind/oracle.hpp"
#include "cind/solver.hpp"

namespace cind {
namespace cli {

inline std::string read_source(const std::string& path, std::istream& fallback) {
  if (path == "-") {
    std::ostringstream os;
    os << fallback.rdbuf();
    return os.str();
  }
  std::ifstream f(path);
  if (!f) throw precondition_error("cannot open input file: " + path);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

inline std::string first_nonempty_line(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    std::string t;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    if (!t.empty()) return t;
  }
  return "";
}

// format: "auto" sniffs the content, otherwise "graph6" or "edgelist".
inline Graph parse_graph_text(const std::string& text, const std::string& format) {
  std::string fmt = format;
  if (fmt == "auto") {
    std::string head = first_nonempty_line(text);
    bool digits = !head.empty();
    for (char c : head)
      if (!std::isdigit(static_cast<unsigned char>(c))) digits = false;
    fmt = digits ? "edgelist" : "graph6";
  }
  if (fmt == "edgelist") return from_edgelist(text);
  if (fmt == "graph6") return from_graph6(text);
  throw precondition_error("unknown graph format: " + fmt);
}

inline Graph load_graph(const std::string& path, const std::string& format,
                        std::istream& fallback) {
  return parse_graph_text(read_source(path, fallback), format);
}

inline std::string render_graph(const Graph& g, const std::string& format) {
  if (format == "edgelist") return to_edgelist(g);
  return to_graph6(g) + "\n";
}

inline void emit(const std::string& payload, const std::string& path,
                 std::ostream& out) {
  if (path == "-") {
    out << payload;
    return;
  }
  std::ofstream f(path);
  if (!f) throw precondition_error("cannot open output file: " + path);
  f << payload;
}

inline std::vector<int> parse_vertex_set(const std::string& text) {
  std::vector<int> vs;
  std::string cur;
  auto flush = [&]() {
    if (cur.empty()) return;
    try {
      vs.push_back(std::stoi(cur));
    } catch (const std::exception&) {
      throw precondition_error("bad vertex in set: " + cur);
    }
    cur.clear();
  };
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) flush();
    else cur += c;
  }
  flush();
  return vs;
}

inline nlohmann::json decomposition_to_json(const BlockDecomposition& dec) {
  nlohmann::json j;
  j["tree_order"] = dec.tree.n();
  j["tree_edges"] = nlohmann::json::array();
  for (auto e : dec.tree.edges()) j["tree_edges"].push_back({e.first, e.second});
  j["labels"] = nlohmann::json::array();
  for (const auto& k : dec.labels) j["labels"].push_back(kind_to_string(k));
  j["attachments"] = nlohmann::json::array();
  for (const auto& [edge, slots] : dec.attachments)
    j["attachments"].push_back({{"edge", {edge.first, edge.second}},
                                {"slots", {slots.first, slots.second}}});
  if (!dec.unit_vertices.empty()) {
    j["unit_vertices"] = nlohmann::json::array();
    for (const auto& b : dec.unit_vertices) j["unit_vertices"].push_back(b.to_vector());
  }
  return j;
}

inline BlockDecomposition decomposition_from_json(const nlohmann::json& j) {
  BlockDecomposition dec;
  if (!j.contains("tree_order") || !j.contains("tree_edges") || !j.contains("labels"))
    throw precondition_error(
        "decomposition json needs tree_order, tree_edges and labels");
  int order = j.at("tree_order").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("tree_edges"))
    edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  dec.tree = build_graph(order, edges);
  for (const auto& s : j.at("labels"))
    dec.labels.push_back(kind_from_string(s.get<std::string>()));
  if (j.contains("attachments")) {
    for (const auto& a : j.at("attachments")) {
      int u = a.at("edge").at(0).get<int>();
      int v = a.at("edge").at(1).get<int>();
      int su = a.at("slots").at(0).get<int>();
      int sv = a.at("slots").at(1).get<int>();
      if (u > v) {
        std::swap(u, v);
        std::swap(su, sv);
      }
      dec.attachments[{u, v}] = {su, sv};
    }
  }
  return dec;
}

struct CommonGraphInput {
  std::string path = "-";
  std::string format = "auto";
};

inline void add_graph_input(CLI::App* cmd, CommonGraphInput& in) {
  cmd->add_option("-i,--input", in.path, "input file, or - for stdin");
  cmd->add_option("--format", in.format, "input format: auto, graph6, edgelist")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
}

}  // namespace cli

inline int run_cli(const std::vector<std::string>& args, std::istream& in,
                   std::ostream& out, std::ostream& err) {
  CLI::App app{"induced 2-regular subgraphs in k-chordal cubic graphs"};
  app.require_subcommand(1);

  // generate
  auto* gen = app.add_subcommand("generate", "emit a graph from a generator");
  std::string gen_name, gen_kind, gen_format = "graph6", gen_output = "-";
  std::string gen_tree_file;
  int gen_cubic_n = 0, gen_fourchordal_t = 0, gen_extremal_t = 0;
  unsigned long long gen_seed = 1;
  auto* src = gen->add_option_group("source", "exactly one generator");
  src->add_option("--name", gen_name, "named graph (see --list)");
  src->add_option("--kind", gen_kind, "block template, e.g. Dprime or Ladder(4)");
  src->add_option("--random-cubic", gen_cubic_n, "random connected cubic graph");
  src->add_option("--four-chordal", gen_fourchordal_t,
                  "random connected cubic graph with no induced cycle longer "
                  "than 4, assembled over a random tree of this order");
  src->add_option("--extremal", gen_extremal_t,
                  "extremal construction over a random tree of this order");
  src->add_option("--extremal-tree", gen_tree_file,
                  "extremal construction over the tree in this edgelist file");
  auto* gen_list = src->add_flag("--list", "list the available named graphs");
  src->require_option(1);
  gen->add_option("--seed", gen_seed, "random seed");
  gen->add_option("--output", gen_output, "output file, or - for stdout");
  gen->add_option("--to", gen_format, "output format: graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  // chordality
  auto* chord = app.add_subcommand("chordality",
                                   "length of the longest induced cycle");
  cli::CommonGraphInput chord_in;
  cli::add_graph_input(chord, chord_in);

  // classify
  auto* clas = app.add_subcommand(
      "classify", "recognise a 2-connected subcubic block with no induced "
                  "cycle longer than 4");
  cli::CommonGraphInput clas_in;
  cli::add_graph_input(clas, clas_in);

  // greedy
  auto* gre = app.add_subcommand(
      "greedy", "induced cycle decomposition of a connected cubic graph");
  cli::CommonGraphInput gre_in;
  bool gre_json = false;
  cli::add_graph_input(gre, gre_in);
  gre->add_flag("--json", gre_json, "emit the trace as json");

  // decompose
  auto* dec = app.add_subcommand(
      "decompose", "block tree of a cubic graph with no induced cycle longer "
                   "than 4");
  cli::CommonGraphInput dec_in;
  cli::add_graph_input(dec, dec_in);

  // assemble
  auto* asmb = app.add_subcommand("assemble",
                                  "build a cubic graph from a decomposition json");
  std::string asmb_input = "-", asmb_format = "graph6", asmb_output = "-";
  asmb->add_option("-i,--input", asmb_input, "decomposition json file, or -");
  asmb->add_option("--to", asmb_format, "output format: graph6 or edgelist")
      ->check(CLI::IsMember({"graph6", "edgelist"}));
  asmb->add_option("--output", asmb_output, "output file, or - for stdout");

  // solve
  auto* sol = app.add_subcommand(
      "solve", "large induced 2-regular subgraph of a cubic graph with no "
               "induced cycle longer than 4");
  cli::CommonGraphInput sol_in;
  bool sol_json = false;
  cli::add_graph_input(sol, sol_in);
  sol->add_flag("--json", sol_json, "emit the certificate as json");

  // oracle
  auto* ora = app.add_subcommand("oracle", "exact search on a small graph");
  cli::CommonGraphInput ora_in;
  std::string ora_problem = "cind";
  int ora_s = 0, ora_max_n = 24;
  long long ora_budget = 1'000'000'000;
  cli::add_graph_input(ora, ora_in);
  ora->add_option("--problem", ora_problem,
                  "cind, independence, regular, mixed or fairdom")
      ->check(CLI::IsMember({"cind", "independence", "regular", "mixed", "fairdom"}));
  ora->add_option("--s", ora_s, "degree for --problem regular");
  ora->add_option("--budget", ora_budget, "node budget for the search");
  ora->add_option("--oracle-max-n", ora_max_n,
                  "refuse graphs with more vertices than this");

  // verify
  auto* ver = app.add_subcommand("verify",
                                 "check a vertex set induces a 2-regular subgraph");
  cli::CommonGraphInput ver_in;
  std::string ver_set;
  cli::add_graph_input(ver, ver_in);
  ver->add_option("--set", ver_set, "comma separated vertex ids")->required();

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a batch suite, emit csv");
  std::string exp_suite, exp_output = "-";
  ExperimentParams exp_params;
  exp->add_option("--suite", exp_suite, "greedy, solver, tightness or oracle")
      ->required()
      ->check(CLI::IsMember(experiment_suite_names()));
  exp->add_option("--count", exp_params.count, "instances to run");
  exp->add_option("--n", exp_params.max_n, "order cap for random pools");
  exp->add_option("--tree-order", exp_params.tree_order,
                  "tree order cap for assembled pools");
  exp->add_option("--seed", exp_params.seed, "random seed");
  exp->add_option("--oracle-max-n", exp_params.oracle_max_n,
                  "exact search only below this order");
  exp->add_option("--budget", exp_params.oracle_budget, "exact search node budget");
  exp->add_option("--output", exp_output, "csv file, or - for stdout");

  std::vector<const char*> argv;
  argv.push_back("cind");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gen->parsed()) {
      if (gen_list->count() > 0) {
        for (const auto& name : named_graph_names()) out << name << "\n";
        return 0;
      }
      Graph g = [&]() {
        if (!gen_name.empty()) return named(gen_name);
        if (!gen_kind.empty()) return family_graph(kind_from_string(gen_kind));
        if (gen_cubic_n > 0) return random_cubic_connected(gen_cubic_n, gen_seed);
        if (gen_fourchordal_t > 0)
          return random_4chordal_cubic(gen_fourchordal_t, gen_seed);
        if (gen_extremal_t > 0) {
          Graph tree = random_tree(gen_extremal_t, gen_seed, 3);
          return generate_extremal(tree).graph;
        }
        Graph tree = cli::load_graph(gen_tree_file, "edgelist", in);
        return generate_extremal(tree).graph;
      }();
      cli::emit(cli::render_graph(g, gen_format), gen_output, out);
      return 0;
    }

    if (chord->parsed()) {
      Graph g = cli::load_graph(chord_in.path, chord_in.format, in);
      auto k = chordality(g);
      if (k) out << *k << "\n";
      else out << "acyclic\n";
      return 0;
    }

    if (clas->parsed()) {
      Graph g = cli::load_graph(clas_in.path, clas_in.format, in);
      Classification c = classify_2connected(g);
      out << kind_to_string(c.kind) << "\n";
      out << "embedding:";
      for (int v : c.embedding) out << " " << v;
      out << "\n";
      return 0;
    }

    if (gre->parsed()) {
      Graph g = cli::load_graph(gre_in.path, gre_in.format, in);
      GreedyTrace t = greedy_decompose(g);
      auto acc = check_greedy_accounting(g, t);
      auto k = chordality(g);
      Rat bound = k ? kchordal_bound(g.n(), *k) : Rat(0);
      bool bound_ok = !k || Rat(t.total_length) >= bound;
      bool ok = acc.per_step_ok && acc.telescopes && bound_ok;
      if (gre_json) {
        nlohmann::json j;
        j["steps"] = nlohmann::json::array();
        for (const auto& s : t.steps)
          j["steps"].push_back({{"cycle", s.cycle.vertices},
                                {"length", s.length},
                                {"mu_drop", s.mu_drop},
                                {"reselected", s.reselected}});
        j["total_length"] = t.total_length;
        j["mu_total"] = t.mu_total;
        j["chordality"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
        j["bound"] = rat_to_string(bound);
        j["verdict"] = ok ? "pass" : "fail";
        out << j.dump(2) << "\n";
      } else {
        for (std::size_t i = 0; i < t.steps.size(); ++i) {
          const auto& s = t.steps[i];
          out << "step " << i << ": length " << s.length << ", drop " << s.mu_drop
              << (s.reselected ? ", reselected" : "") << ", cycle";
          for (int v : s.cycle.vertices) out << " " << v;
          out << "\n";
        }
        out << "total length " << t.total_length << ", drops sum to " << t.mu_total
            << "\n";
        if (k) out << "chordality " << *k << ", bound " << rat_to_string(bound)
                   << "\n";
        out << "verdict: " << (ok ? "pass" : "fail") << "\n";
      }
      return ok ? 0 : 1;
    }

    if (dec->parsed()) {
      Graph g = cli::load_graph(dec_in.path, dec_in.format, in);
      BlockDecomposition d = decompose_4chordal(g);
      out << cli::decomposition_to_json(d).dump(2) << "\n";
      return 0;
    }

    if (asmb->parsed()) {
      auto j = nlohmann::json::parse(cli::read_source(asmb_input, in));
      BlockDecomposition d = cli::decomposition_from_json(j);
      Assembly a = assemble(d);
      cli::emit(cli::render_graph(a.graph, asmb_format), asmb_output, out);
      return 0;
    }

    if (sol->parsed()) {
      Graph g = cli::load_graph(sol_in.path, sol_in.format, in);
      SolveCertificate cert = solve(g);
      if (sol_json) {
        nlohmann::json j;
        j["order"] = cert.order;
        j["bound"] = rat_to_string(cert.bound);
        j["tight"] = cert.tight;
        j["vertices"] = cert.subgraph.to_vector();
        j["reduction_log"] = cert.reduction_log;
        out << j.dump(2) << "\n";
      } else {
        out << "order " << cert.order << ", bound " << rat_to_string(cert.bound)
            << (cert.tight ? ", tight" : "") << "\n";
        out << "vertices:";
        for (int v : cert.subgraph.to_vector()) out << " " << v;
        out << "\n";
        for (const auto& line : cert.reduction_log) out << line << "\n";
      }
      return 0;
    }

    if (ora->parsed()) {
      Graph g = cli::load_graph(ora_in.path, ora_in.format, in);
      if (g.n() > ora_max_n)
        throw precondition_error("graph order " + std::to_string(g.n()) +
                                 " exceeds --oracle-max-n " +
                                 std::to_string(ora_max_n));
      OracleOptions opt;
      opt.budget = ora_budget;
      OracleResult res = [&]() {
        if (ora_problem == "cind") return c_ind_exact(g, opt);
        if (ora_problem == "independence") return independence_number(g, opt);
        if (ora_problem == "regular") return max_induced_regular(g, ora_s, opt);
        if (ora_problem == "mixed") return max_mixed_regular(g, opt);
        return fair_domination_number_regular(g, opt);
      }();
      out << res.value << "\n";
      out << "certificate:";
      for (int v : res.certificate.to_vector()) out << " " << v;
      out << "\n";
      return 0;
    }

    if (ver->parsed()) {
      Graph g = cli::load_graph(ver_in.path, ver_in.format, in);
      auto vs = cli::parse_vertex_set(ver_set);
      for (int v : vs)
        if (v < 0 || v >= g.n())
          throw precondition_error("vertex out of range: " + std::to_string(v));
      TwoRegularVerdict verdict =
          verify_induced_2_regular(g, Bitset::from_vector(g.n(), vs));
      if (verdict.ok) {
        out << "ok: induces a 2-regular subgraph on " << vs.size() << " vertices\n";
        return 0;
      }
      out << "fail: vertex " << verdict.violator << " has inside degree "
          << verdict.inside_degree << "\n";
      return 1;
    }

    if (exp->parsed()) {
      ExperimentReport rep = run_experiment_suite(exp_suite, exp_params);
      cli::emit(rep.csv, exp_output, out);
      err << rep.summary << "\n";
      return rep.passed == rep.total ? 0 : 1;
    }
  } catch (const internal_error& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const graph6_error& e) {
    err << "error: " << e.what() << " (byte " << e.offset() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace cind
