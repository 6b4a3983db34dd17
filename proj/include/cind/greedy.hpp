#pragma once

// Greedy decomposition of a connected cubic graph: repeatedly pick an induced
// cycle C minimizing (cyclomatic drop - length), delete its closed
// neighborhood, and continue until a forest remains. The chosen cycles are
// pairwise nonadjacent, so their union induces a 2-regular subgraph, and the
// per-step drops telescope to the cyclomatic number n/2 + 1.

#include <algorithm>
#include <optional>
#include <vector>

#include "cind/cycles.hpp"
#include "cind/graph.hpp"
#include "cind/oracle.hpp"
#include "cind/rational.hpp"

namespace cind {

struct GreedyStep {
  InducedCycle cycle;   // in host-graph vertex ids
  int length = 0;
  int n_before = 0;     // order of the residual graph the cycle was chosen in
  int m_before = 0;
  int mu_drop = 0;      // cyclomatic number lost by deleting N[V(C)]
  bool reselected = false;  // minimizer violated the per-step cap and was replaced
};

struct GreedyTrace {
  std::vector<GreedyStep> steps;
  Bitset chosen_union;       // union of all chosen cycles, in host ids
  Bitset residual_vertices;  // vertex set of the final forest, in host ids
  int total_length = 0;
  int mu_total = 0;  // sum of drops; equals the host cyclomatic number
};

namespace detail {

// Cap on the cyclomatic drop a step may take: 2*len for the first step,
// 2*len - 2 afterwards.
inline int step_cap(int len, bool first) { return first ? 2 * len : 2 * len - 2; }

}  // namespace detail

// pre: g connected and cubic. Deterministic: candidate cycles are ranked by
// (mu_drop - length, length, lexicographic vertex set) in the residual
// graph's vertex order. If the minimizer exceeds the step cap, the best
// cap-respecting candidate is taken instead and the step is flagged; the
// structure theory guarantees one exists, so exhausting candidates without
// finding one is an internal consistency failure.
inline GreedyTrace greedy_decompose(const Graph& g) {
  if (!is_cubic(g)) throw precondition_error("greedy: graph is not cubic");
  if (!is_connected(g)) throw precondition_error("greedy: graph is not connected");
  GreedyTrace trace;
  trace.chosen_union = Bitset(g.n());
  trace.residual_vertices = Bitset::full(g.n());

  // current residual graph plus its map to host ids
  Graph cur = g;
  std::vector<int> to_host(g.n());
  for (int v = 0; v < g.n(); ++v) to_host[v] = v;

  bool first = true;
  while (true) {
    int mu_cur = cyclomatic_number(cur);
    if (mu_cur == 0) break;  // forest
    auto cycles = enumerate_induced_cycles(
        cur, is_4_chordal(cur) ? std::optional<int>(4) : std::nullopt);
    if (cycles.empty()) throw internal_error("greedy: positive mu but no induced cycle");

    struct Candidate {
      int idx = -1;
      int mu_drop = 0;
      Bitset keep;
    };
    auto rank_less = [&](int drop_a, const InducedCycle& a, int drop_b,
                         const InducedCycle& b) {
      int ka = drop_a - a.length(), kb = drop_b - b.length();
      if (ka != kb) return ka < kb;
      if (a.length() != b.length()) return a.length() < b.length();
      return a.vertices < b.vertices;  // canonical form, starts at min vertex
    };
    Candidate best, best_capped;
    std::vector<int> drops(cycles.size());
    std::vector<Bitset> keeps;
    keeps.reserve(cycles.size());
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      Bitset cyc(cur.n());
      for (int v : cycles[i].vertices) cyc.set(v);
      Bitset keep = closed_neighborhood(cur, cyc).complemented();
      auto sub = induced_subgraph(cur, keep);
      drops[i] = mu_cur - cyclomatic_number(sub.graph);
      keeps.push_back(keep);
      if (best.idx < 0 ||
          rank_less(drops[i], cycles[i], drops[best.idx], cycles[best.idx]))
        best = {static_cast<int>(i), drops[i], keep};
      if (drops[i] <= detail::step_cap(cycles[i].length(), first)) {
        if (best_capped.idx < 0 ||
            rank_less(drops[i], cycles[i], drops[best_capped.idx],
                      cycles[best_capped.idx]))
          best_capped = {static_cast<int>(i), drops[i], keep};
      }
    }
    bool reselected = false;
    Candidate chosen = best;
    if (best.mu_drop > detail::step_cap(cycles[best.idx].length(), first)) {
      if (best_capped.idx < 0)
        throw internal_error("greedy: no candidate cycle satisfies the step cap");
      chosen = best_capped;
      reselected = true;
    }

    const InducedCycle& c = cycles[chosen.idx];
    GreedyStep step;
    step.length = c.length();
    step.n_before = cur.n();
    step.m_before = cur.m();
    step.mu_drop = chosen.mu_drop;
    step.reselected = reselected;
    step.cycle.vertices.reserve(c.vertices.size());
    for (int v : c.vertices) {
      step.cycle.vertices.push_back(to_host[v]);
      trace.chosen_union.set(to_host[v]);
    }
    trace.total_length += step.length;
    trace.mu_total += step.mu_drop;
    trace.steps.push_back(std::move(step));

    auto sub = induced_subgraph(cur, chosen.keep);
    std::vector<int> next_map(sub.graph.n());
    for (int v = 0; v < sub.graph.n(); ++v) next_map[v] = to_host[sub.new_to_old[v]];
    for (int v = 0; v < cur.n(); ++v)
      if (!chosen.keep.test(v)) trace.residual_vertices.reset(to_host[v]);
    cur = std::move(sub.graph);
    to_host = std::move(next_map);
    first = false;
  }
  if (trace.mu_total != cyclomatic_number(g))
    throw internal_error("greedy: step drops do not telescope to the host mu");
  return trace;
}

// Per-component wrapper for graphs that are cubic but not connected; the
// report keeps one trace per component in ascending order of their smallest
// vertex, with cycles in host ids.
struct GreedyComponentReport {
  bool disconnected = false;
  std::vector<GreedyTrace> components;
  int total_length = 0;
  int mu_total = 0;
};

inline GreedyComponentReport greedy_decompose_components(const Graph& g) {
  if (!is_cubic(g)) throw precondition_error("greedy: graph is not cubic");
  GreedyComponentReport rep;
  Bitset unseen = Bitset::full(g.n());
  while (unseen.any()) {
    int s = unseen.first();
    // BFS to collect the component of s
    Bitset comp(g.n());
    comp.set(s);
    std::vector<int> queue{s};
    for (std::size_t qi = 0; qi < queue.size(); ++qi)
      g.adj(queue[qi]).for_each([&](int u) {
        if (!comp.test(u)) {
          comp.set(u);
          queue.push_back(u);
        }
      });
    auto sub = induced_subgraph(g, comp);
    GreedyTrace t = greedy_decompose(sub.graph);
    // remap to host ids
    GreedyTrace host;
    host.chosen_union = Bitset(g.n());
    host.residual_vertices = Bitset(g.n());
    for (auto& st : t.steps) {
      GreedyStep hs = st;
      for (auto& v : hs.cycle.vertices) v = sub.new_to_old[v];
      host.steps.push_back(std::move(hs));
    }
    t.chosen_union.for_each([&](int v) { host.chosen_union.set(sub.new_to_old[v]); });
    t.residual_vertices.for_each(
        [&](int v) { host.residual_vertices.set(sub.new_to_old[v]); });
    host.total_length = t.total_length;
    host.mu_total = t.mu_total;
    rep.total_length += t.total_length;
    rep.mu_total += t.mu_total;
    rep.components.push_back(std::move(host));
    unseen = unseen.and_not(comp);
  }
  rep.disconnected = rep.components.size() > 1;
  return rep;
}

// Verdict of the per-step accounting: first drop at most 2*l, later drops at
// most 2*l - 2, and the drops telescope to the cyclomatic number of the host
// graph (n/2 + 1 when the host is connected and cubic).
struct GreedyAccounting {
  bool per_step_ok = true;
  bool telescopes = true;
  int mu_expected = 0;
};

inline GreedyAccounting check_greedy_accounting(const Graph& g, const GreedyTrace& t) {
  GreedyAccounting a;
  a.mu_expected = cyclomatic_number(g);
  for (std::size_t i = 0; i < t.steps.size(); ++i)
    if (t.steps[i].mu_drop > detail::step_cap(t.steps[i].length, i == 0))
      a.per_step_ok = false;
  a.telescopes = (t.mu_total == a.mu_expected);
  return a;
}

// Greedy union versus the chordality-driven lower bound (n-2)/(4-4/k).
struct ChordalBoundReport {
  int chordality_k = 0;
  Rat bound{0};
  int greedy_order = 0;
  bool ok = false;
};

inline ChordalBoundReport check_kchordal_bound(const Graph& g) {
  auto k = chordality(g);
  if (!k) throw precondition_error("bound check: graph is acyclic");
  GreedyTrace t = greedy_decompose(g);
  ChordalBoundReport r;
  r.chordality_k = *k;
  r.bound = kchordal_bound(g.n(), *k);
  r.greedy_order = t.total_length;
  r.ok = Rat(r.greedy_order) >= r.bound;
  return r;
}

// For cubic graphs with small independence number: alpha <= (3/8 - eps) n
// forces the maximum induced 2-regular order above (1/4 + eps) n - 1. Both
// quantities come from the exact oracle.
struct LowIndependenceReport {
  int alpha = 0;
  Rat alpha_threshold{0};
  bool applicable = false;  // alpha <= (3/8 - eps) n
  Rat value_threshold{0};
  int c_ind = 0;
  bool ok = true;  // vacuously true when not applicable
};

inline LowIndependenceReport check_low_independence_bound(
    const Graph& g, const Rat& eps, const OracleOptions& opt = {}) {
  if (eps <= Rat(0) || eps >= Rat(3, 8))
    throw precondition_error("eps must lie strictly between 0 and 3/8");
  LowIndependenceReport r;
  r.alpha = independence_number(g, opt).value;
  r.alpha_threshold = (Rat(3, 8) - eps) * g.n();
  r.applicable = Rat(r.alpha) <= r.alpha_threshold;
  r.value_threshold = low_independence_bound(g.n(), eps);
  r.c_ind = c_ind_exact(g, opt).value;
  r.ok = !r.applicable || Rat(r.c_ind) > r.value_threshold;
  return r;
}

}  // namespace cind
