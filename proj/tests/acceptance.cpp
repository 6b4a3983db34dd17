// Acceptance gate: ten checks, one line each, nonzero exit on any failure.

#include <chrono>
#include <iostream>
#include <set>
#include <sstream>
#include <vector>

#include "cind/blocktree.hpp"
#include "cind/classify.hpp"
#include "cind/generators.hpp"
#include "cind/greedy.hpp"
#include "cind/oracle.hpp"
#include "cind/reference.hpp"
#include "cind/solver.hpp"

using namespace cind;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point t0) {
  return std::chrono::duration<double>(clock_type::now() - t0).count();
}

std::vector<Graph> the_pool;  // 200 random connected cubic graphs, order 8..24

void build_pool() {
  std::mt19937_64 rng(20260817);
  for (int i = 0; i < 200; ++i) {
    int n = 8 + 2 * (i % 9);  // 8, 10, ..., 24
    the_pool.push_back(random_cubic_connected(n, rng()));
  }
}

bool criterion1(std::string& note) {
  auto t0 = clock_type::now();
  for (const auto& g : the_pool) {
    GreedyTrace t = greedy_decompose(g);
    auto acc = check_greedy_accounting(g, t);
    if (!acc.per_step_ok || !acc.telescopes) return false;
    if (t.mu_total != g.n() / 2 + 1) return false;
    if (!verify_induced_2_regular(g, t.chosen_union).ok) return false;
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "200 greedy decompositions, per-step caps and telescoping hold, "
     << dt << "s";
  note = os.str();
  return dt < 60.0;
}

bool criterion2(std::string& note) {
  auto t0 = clock_type::now();
  for (const auto& g : the_pool) {
    auto rep = check_kchordal_bound(g);
    if (!rep.ok) return false;
    if (Rat(rep.greedy_order) < rep.bound) return false;
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "greedy order meets k(n-2)/(4k-4) on all 200 pool graphs, " << dt << "s";
  note = os.str();
  return dt < 60.0;
}

bool criterion3(std::string& note) {
  int applicable = 0;
  std::vector<Graph> gs;
  gs.push_back(complete_graph(4));
  gs.push_back(crossed_prism(4));
  for (const auto& g : the_pool)
    if (g.n() <= 20) gs.push_back(g);
  for (const Rat& eps : {Rat(1, 16), Rat(1, 8)}) {
    for (const auto& g : gs) {
      auto rep = check_low_independence_bound(g, eps);
      if (!rep.applicable) continue;
      ++applicable;
      if (!rep.ok) return false;
      if (!(Rat(rep.c_ind) > low_independence_bound(g.n(), eps))) return false;
    }
  }
  std::ostringstream os;
  os << applicable << " applicable low-independence instances, all above the bound";
  note = os.str();
  return applicable >= 1;
}

bool criterion4(std::string& note) {
  int classified = 0;
  std::mt19937_64 rng(8899);
  auto shuffle_graph = [&](const Graph& g) {
    std::vector<int> perm(g.n());
    for (int i = 0; i < g.n(); ++i) perm[i] = i;
    for (int i = g.n() - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
    std::vector<std::pair<int, int>> edges;
    for (auto e : g.edges()) edges.emplace_back(perm[e.first], perm[e.second]);
    return build_graph(g.n(), edges);
  };

  std::vector<Graph> targets;
  for (const auto& name : {"K3", "K4", "D", "Dprime", "Prism", "K23", "K33",
                           "K33minus"})
    targets.push_back(named(name));
  for (int k = 2; k <= 8; ++k) {
    targets.push_back(ladder_family(BlockTag::ladder, k));
    targets.push_back(ladder_family(BlockTag::ladder_prime, k));
    targets.push_back(ladder_family(BlockTag::ladder_double_prime, k));
  }
  for (auto& g : targets) {
    Classification c = classify_2connected(shuffle_graph(g));
    (void)c;
    ++classified;
  }

  // random subcubic candidates: cubic graphs with a few edges removed
  int random_hits = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = 4 + 2 * int(rng() % 5);  // 4..12
    Graph g = random_cubic_connected(n, rng());
    int drop = int(rng() % 3);
    for (int d = 0; d < drop; ++d) {
      auto es = g.edges();
      auto e = es[rng() % es.size()];
      std::vector<std::pair<int, int>> rest;
      for (auto f : es)
        if (f != e) rest.push_back(f);
      g = build_graph(g.n(), rest);
    }
    if (!is_subcubic(g) || !is_two_connected(g) || !is_4_chordal(g)) continue;
    Classification c = classify_2connected(g);
    (void)c;
    ++classified;
    ++random_hits;
  }
  std::ostringstream os;
  os << classified << " blocks classified (" << random_hits
     << " from filtered random sampling), none unrecognized";
  note = os.str();
  return random_hits >= 5;
}

bool criterion5(std::string& note) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_4chordal_cubic(2 + int(rng() % 7), rng());
    BlockDecomposition d1 = decompose_4chordal(g);
    Assembly a = assemble(d1);
    if (!is_cubic(a.graph) || !is_connected(a.graph) || !is_4_chordal(a.graph))
      return false;
    if (a.graph.n() != g.n() || a.graph.m() != g.m()) return false;
    BlockDecomposition d2 = decompose_4chordal(a.graph);
    if (d2.tree.n() != d1.tree.n() || d2.tree.m() != d1.tree.m()) return false;
    for (int deg = 1; deg <= 4; ++deg) {
      std::multiset<std::string> m1, m2;
      for (int v = 0; v < d1.tree.n(); ++v)
        if (d1.tree.degree(v) == deg) m1.insert(kind_to_string(d1.labels[v]));
      for (int v = 0; v < d2.tree.n(); ++v)
        if (d2.tree.degree(v) == deg) m2.insert(kind_to_string(d2.labels[v]));
      if (m1 != m2) return false;
    }
  }
  note = "100 decompose/assemble roundtrips preserve the labels per tree degree";
  return true;
}

bool criterion6(std::string& note) {
  auto t0 = clock_type::now();
  std::mt19937_64 rng(606060);
  int max_n = 0;
  for (int trial = 0; trial < 500; ++trial) {
    Graph g = random_4chordal_cubic(2 + int(rng() % 9), rng());
    max_n = std::max(max_n, g.n());
    SolveCertificate cert = solve(g);
    if (!verify_induced_2_regular(g, cert.subgraph).ok) return false;
    if (Rat(cert.order) < five_eighths_bound(g.n())) return false;
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "500 assembled graphs solved and verified (largest order " << max_n
     << "), " << dt << "s";
  note = os.str();
  return dt < 300.0;
}

bool criterion7(std::string& note) {
  auto t0 = clock_type::now();
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
      {{BlockTag::plain_vertex, 0}, 8, 8},
      {{BlockTag::k3, 0}, 9, 8},
      {{BlockTag::k23, 0}, 11, 10},
      {{BlockTag::ladder_prime, 2}, 11, 10},
      {{BlockTag::ladder_prime, 3}, 12, 12},
      {{BlockTag::ladder, 2}, 13, 12},
      {{BlockTag::ladder, 3}, 15, 14},
      {{BlockTag::ladder, 4}, 16, 16},
  };
  for (const auto& row : rows) {
    int cap = attachment_capacity(row.kind);
    for (int slot = 0; slot < cap; ++slot) {
      BlockPlusPattern p = block_plus_pattern(row.kind, slot);
      if (p.value_full != row.full || p.value_minus_y != row.minus_y) return false;
      // independent reconstruction of the padded block, checked by the
      // exact search from scratch
      auto full = c_ind_exact(p.b_plus);
      if (full.value != row.full) return false;
      auto del = delete_vertices(p.b_plus, Bitset::of(p.b_plus.n(), {p.y_vertex}));
      auto minus = c_ind_exact(del.graph);
      if (minus.value != row.minus_y) return false;
    }
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "pattern table reproduced by exact search over every open slot, " << dt
     << "s";
  note = os.str();
  return dt < 600.0;
}

bool criterion8(std::string& note) {
  std::vector<Graph> trees = {path_graph(2), path_graph(3), path_graph(4),
                              star_graph(3)};
  for (const auto& tree : trees) {
    Assembly a = generate_extremal(tree);
    SolveCertificate cert = solve(a.graph);
    if (!cert.tight) return false;
    if (a.graph.n() <= 24) {
      auto exact = c_ind_exact(a.graph);
      if (exact.value != cert.order) return false;
    }
  }
  Graph two = generate_extremal(path_graph(2)).graph;
  if (c_ind_exact(two).value != 7) return false;
  note = "extremal graphs over all trees of order <= 4 are tight";
  return true;
}

bool criterion9(std::string& note) {
  if (c_ind_exact(named("CrossedPrism6")).value != 6) return false;
  if (c_ind_exact(complete_graph(4)).value != 3) return false;
  if (c_ind_exact(complete_bipartite(3, 3)).value != 4) return false;
  if (c_ind_exact(named("Prism")).value != 4) return false;
  // the vertex/edge/cycle optimum on the 10-vertex 3-regular catalogue
  // graph is 7 (an induced 6-cycle plus an isolated vertex), one above the
  // conjectured 3n/5; both searches and plain enumeration agree
  int mixed = max_mixed_regular(petersen()).value;
  if (mixed != 7) return false;
  if (reference::naive_max_mixed_regular(petersen()).value != 7) return false;
  note = "catalogue values exact; note: mixed optimum on the 10-vertex "
         "3-regular graph is 7, exceeding the conjectured 3n/5 = 6";
  return true;
}

bool criterion10(std::string& note) {
  auto t0 = clock_type::now();
  std::mt19937_64 rng(101010);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 4 + int(rng() % 13);  // 4..16
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng() & 1) edges.emplace_back(u, v);
    Graph g = build_graph(n, edges);
    for (int s = 0; s <= 2; ++s) {
      auto fast = max_induced_regular(g, s);
      auto slow = reference::naive_max_induced_regular(g, s);
      if (fast.value != slow.value) return false;
      if (!(fast.certificate == slow.certificate)) return false;
    }
    if (c_ind_exact(g).value != reference::naive_c_ind(g).value) return false;
    auto fm = max_mixed_regular(g);
    auto sm = reference::naive_max_mixed_regular(g);
    if (fm.value != sm.value) return false;

    Graph cubic = random_cubic_connected(8 + 2 * int(rng() % 4), rng());
    if (fair_domination_number_regular(cubic).value !=
        reference::naive_fair_domination_regular(cubic).value)
      return false;
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "search matches exhaustive enumeration on 50 random graphs, " << dt
     << "s";
  note = os.str();
  return dt < 120.0;
}

}  // namespace

int main() {
  build_pool();
  struct Entry {
    const char* name;
    bool (*fn)(std::string&);
  };
  std::vector<Entry> checks = {
      {"greedy accounting on 200 random cubic graphs", criterion1},
      {"chordality bound on the same pool", criterion2},
      {"low-independence bound where applicable", criterion3},
      {"block classification totality", criterion4},
      {"decomposition roundtrips", criterion5},
      {"constructive solver on 500 assembled graphs", criterion6},
      {"pattern table versus exact search", criterion7},
      {"extremal constructions are tight", criterion8},
      {"fixed catalogue values", criterion9},
      {"search versus enumeration", criterion10},
  };
  bool all = true;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    std::string note;
    bool ok = false;
    try {
      ok = checks[i].fn(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    all = all && ok;
    std::cout << "criterion " << (i + 1) << ": " << (ok ? "PASS" : "FAIL") << " - "
              << checks[i].name << (note.empty() ? "" : " (" + note + ")")
              << std::endl;
  }
  return all ? 0 : 1;
}
