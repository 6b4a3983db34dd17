#pragma once

// Batch experiment suites producing deterministic CSV reports. Every row
// carries the instance in graph6 form so any line can be reproduced in
// isolation; rationals are printed exactly as p/q.

#include <sstream>
#include <string>
#include <vector>

#include "cind/generators.hpp"
#include "cind/graph6.hpp"
#include "cind/greedy.hpp"
#include "cind/oracle.hpp"
#include "cind/rational.hpp"
#include "cind/reference.hpp"
#include "cind/solver.hpp"

namespace cind {

struct ExperimentReport {
  std::string csv;
  int total = 0;
  int passed = 0;
  std::string summary;
};

struct ExperimentParams {
  int count = 20;
  int max_n = 16;        // order cap for random cubic pools
  int tree_order = 6;    // tree-order cap for decomposition pools
  unsigned long long seed = 1;
  int oracle_max_n = 24;
  long long oracle_budget = 1'000'000'000;
};

namespace detail {

inline const char* csv_header() {
  return "suite,id,graph6,n,m,chordality,greedy_order,kchordal_bound,"
         "baseline_bound,solver_order,solver_bound,tight,oracle_value,verdict\n";
}

struct RowBuilder {
  std::ostringstream os;
  void field(const std::string& s) { os << s << ","; }
  void field_end(const std::string& s) { os << s << "\n"; }
};

}  // namespace detail

// Greedy decomposition on random connected cubic graphs: per-step caps,
// telescoping, and both lower bounds on the union's order.
inline ExperimentReport run_greedy_suite(const ExperimentParams& p) {
  ExperimentReport rep;
  std::ostringstream csv;
  csv << detail::csv_header();
  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < p.count; ++i) {
    int span = (p.max_n >= 8) ? (p.max_n - 8) / 2 + 1 : 1;
    int n = (p.max_n >= 8) ? 8 + 2 * detail::rand_below(rng, span) : p.max_n;
    Graph g = random_cubic_connected(n, rng());
    GreedyTrace t = greedy_decompose(g);
    auto acc = check_greedy_accounting(g, t);
    auto k = chordality(g);
    Rat bound = kchordal_bound(g.n(), *k);
    Rat baseline = regular_baseline_bound(g.n(), 3);
    bool ok = acc.per_step_ok && acc.telescopes && Rat(t.total_length) >= bound &&
              Rat(t.total_length) >= baseline;
    csv << "greedy," << i << "," << to_graph6(g) << "," << g.n() << "," << g.m()
        << "," << *k << "," << t.total_length << "," << rat_to_string(bound) << ","
        << rat_to_string(baseline) << ",,,,," << (ok ? "pass" : "fail") << "\n";
    ++rep.total;
    if (ok) ++rep.passed;
  }
  rep.csv = csv.str();
  return rep;
}

// Constructive solver on random 4-chordal cubic graphs, with the exact
// search confirming optimality headroom on small instances.
inline ExperimentReport run_solver_suite(const ExperimentParams& p) {
  ExperimentReport rep;
  std::ostringstream csv;
  csv << detail::csv_header();
  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < p.count; ++i) {
    int t = 2 + detail::rand_below(rng, std::max(1, p.tree_order - 1));
    Graph g = random_4chordal_cubic(t, rng());
    SolveCertificate cert = solve(g);
    bool ok = verify_induced_2_regular(g, cert.subgraph).ok &&
              Rat(cert.order) >= cert.bound;
    std::string oracle_field;
    if (g.n() <= p.oracle_max_n) {
      OracleOptions opt;
      opt.budget = p.oracle_budget;
      auto res = c_ind_exact(g, opt);
      oracle_field = std::to_string(res.value);
      ok = ok && res.value >= cert.order;
    }
    csv << "solver," << i << "," << to_graph6(g) << "," << g.n() << "," << g.m()
        << ",,,,," << cert.order << "," << rat_to_string(cert.bound) << ","
        << (cert.tight ? "true" : "false") << "," << oracle_field << ","
        << (ok ? "pass" : "fail") << "\n";
    ++rep.total;
    if (ok) ++rep.passed;
  }
  rep.csv = csv.str();
  return rep;
}

// Extremal constructions from random bounded-degree trees: the solver must
// report a tight certificate, and the exact search must agree when it fits.
inline ExperimentReport run_tightness_suite(const ExperimentParams& p) {
  ExperimentReport rep;
  std::ostringstream csv;
  csv << detail::csv_header();
  std::mt19937_64 rng(p.seed);
  for (int i = 0; i < p.count; ++i) {
    int t = 2 + detail::rand_below(rng, std::max(1, p.tree_order - 1));
    Graph tree = random_tree(t, rng(), 3);
    Graph g = generate_extremal(tree).graph;
    OracleOptions opt;
    opt.budget = p.oracle_budget;
    TightnessReport tr = check_tightness(g, p.oracle_max_n, opt);
    bool ok = tr.solver_tight && (!tr.oracle_tight.has_value() || *tr.oracle_tight);
    csv << "tightness," << i << "," << to_graph6(g) << "," << g.n() << "," << g.m()
        << ",,,,," << tr.certificate.order << ","
        << rat_to_string(tr.certificate.bound) << ","
        << (tr.solver_tight ? "true" : "false") << ","
        << (tr.oracle_value ? std::to_string(*tr.oracle_value) : "") << ","
        << (ok ? "pass" : "fail") << "\n";
    ++rep.total;
    if (ok) ++rep.passed;
  }
  rep.csv = csv.str();
  return rep;
}

// Branch-and-bound versus exhaustive enumeration on small random graphs, for
// every supported problem; values and lexicographically least certificates
// must both match.
inline ExperimentReport run_oracle_suite(const ExperimentParams& p) {
  ExperimentReport rep;
  std::ostringstream csv;
  csv << detail::csv_header();
  std::mt19937_64 rng(p.seed);
  int cap = std::min(p.max_n, 16);
  for (int i = 0; i < p.count; ++i) {
    int n = 4 + detail::rand_below(rng, std::max(1, cap - 3));
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) edges.emplace_back(u, v);
    Graph g = build_graph(n, edges);
    bool ok = true;
    for (int s = 0; s <= 2; ++s) {
      auto fast = max_induced_regular(g, s);
      auto slow = reference::naive_max_induced_regular(g, s);
      ok = ok && fast.value == slow.value && fast.certificate == slow.certificate;
    }
    {
      auto fast = max_mixed_regular(g);
      auto slow = reference::naive_max_mixed_regular(g);
      ok = ok && fast.value == slow.value && fast.certificate == slow.certificate;
    }
    auto cind_fast = c_ind_exact(g);
    csv << "oracle," << i << "," << to_graph6(g) << "," << g.n() << "," << g.m()
        << ",,,,,,,," << cind_fast.value << "," << (ok ? "pass" : "fail") << "\n";
    ++rep.total;
    if (ok) ++rep.passed;
  }
  rep.csv = csv.str();
  return rep;
}

inline const std::vector<std::string>& experiment_suite_names() {
  static const std::vector<std::string> names = {"greedy", "solver", "tightness",
                                                 "oracle"};
  return names;
}

inline ExperimentReport run_experiment_suite(const std::string& suite,
                                             const ExperimentParams& p) {
  ExperimentReport rep;
  if (suite == "greedy") rep = run_greedy_suite(p);
  else if (suite == "solver") rep = run_solver_suite(p);
  else if (suite == "tightness") rep = run_tightness_suite(p);
  else if (suite == "oracle") rep = run_oracle_suite(p);
  else throw precondition_error("unknown experiment suite: " + suite);
  std::ostringstream sum;
  sum << suite << ": " << rep.passed << "/" << rep.total << " instances pass";
  rep.summary = sum.str();
  return rep;
}

}  // namespace cind
