#pragma once

// Exact maximization of induced subgraphs with degree constraints by
// branch and bound over per-vertex statuses (undecided / in / out) with
// unit propagation. Branching follows ascending vertex order and tries
// inclusion first, and the incumbent is replaced only on strict
// improvement, so the reported certificate is the lexicographically
// smallest optimum (compare sorted vertex sequences).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cind/graph.hpp"

namespace cind {

// Thrown when a search exceeds its node budget.
struct budget_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  long long budget = 1'000'000'000;  // max search nodes before budget_error
};

struct OracleResult {
  int value = 0;
  Bitset certificate;  // lexicographically smallest optimum
  long long explored = 0;
};

namespace detail {

// One engine serves both constraint shapes: exact_degree(s) keeps every
// chosen vertex at inside degree exactly s; vertex_edge_cycle_mix caps
// inside degree at 2 and rejects completions in which a degree-1 vertex
// does not pair up into a two-vertex component.
enum class subgraph_rule { exact_degree, vertex_edge_cycle_mix };

class regular_search {
 public:
  regular_search(const Graph& g, subgraph_rule rule, int s, long long budget)
      : g_(g),
        rule_(rule),
        s_(s),
        budget_(budget),
        status_(g.n(), kUndecided),
        in_deg_(g.n(), 0),
        pot_deg_(g.n(), 0),
        best_set_(g.n()) {
    for (int v = 0; v < g_.n(); ++v) pot_deg_[v] = g_.degree(v);
  }

  OracleResult run() {
    n_in_ = 0;
    n_undecided_ = g_.n();
    best_ = 0;  // the empty set is always feasible
    best_set_ = Bitset(g_.n());
    explored_ = 0;
    search();
    OracleResult r;
    r.value = best_;
    r.certificate = best_set_;
    r.explored = explored_;
    return r;
  }

 private:
  static constexpr int8_t kUndecided = 0, kIn = 1, kOut = 2;

  const Graph& g_;
  subgraph_rule rule_;
  int s_;
  long long budget_;
  std::vector<int8_t> status_;
  std::vector<int> in_deg_;   // neighbors with status in
  std::vector<int> pot_deg_;  // neighbors with status in or undecided
  std::vector<int> trail_;    // decided vertices, for undo
  int n_in_ = 0;
  int n_undecided_ = 0;
  int best_ = 0;
  Bitset best_set_;
  long long explored_ = 0;
  bool contradiction_ = false;

  void decide(int v, int8_t st) {
    status_[v] = st;
    trail_.push_back(v);
    --n_undecided_;
    if (st == kIn) {
      ++n_in_;
      g_.adj(v).for_each([&](int u) { ++in_deg_[u]; });
    } else {
      g_.adj(v).for_each([&](int u) { --pot_deg_[u]; });
    }
  }

  void undo_to(size_t mark) {
    while (trail_.size() > mark) {
      int v = trail_.back();
      trail_.pop_back();
      if (status_[v] == kIn) {
        --n_in_;
        g_.adj(v).for_each([&](int u) { --in_deg_[u]; });
      } else {
        g_.adj(v).for_each([&](int u) { ++pot_deg_[u]; });
      }
      status_[v] = kUndecided;
      ++n_undecided_;
    }
    contradiction_ = false;
  }

  // Forced assignment during propagation. A vertex already holding the
  // opposite status is a contradiction.
  void force(int v, int8_t st, std::vector<int>& work) {
    if (status_[v] == st) return;
    if (status_[v] != kUndecided) {
      contradiction_ = true;
      return;
    }
    decide(v, st);
    work.push_back(v);
    g_.adj(v).for_each([&](int u) { work.push_back(u); });
  }

  void check_vertex(int v, std::vector<int>& work) {
    if (status_[v] == kOut) return;
    int cap = (rule_ == subgraph_rule::exact_degree) ? s_ : 2;
    if (status_[v] == kIn) {
      if (in_deg_[v] > cap) {
        contradiction_ = true;
        return;
      }
      if (rule_ == subgraph_rule::exact_degree && pot_deg_[v] < s_) {
        contradiction_ = true;
        return;
      }
      if (in_deg_[v] == cap) {
        g_.adj(v).for_each([&](int u) {
          if (!contradiction_ && status_[u] == kUndecided) force(u, kOut, work);
        });
      } else if (rule_ == subgraph_rule::exact_degree && pot_deg_[v] == s_) {
        g_.adj(v).for_each([&](int u) {
          if (!contradiction_ && status_[u] == kUndecided) force(u, kIn, work);
        });
      }
    } else {  // undecided: rule out vertices that could never be included
      if (in_deg_[v] > cap) force(v, kOut, work);
      else if (rule_ == subgraph_rule::exact_degree && pot_deg_[v] < s_)
        force(v, kOut, work);
    }
  }

  bool propagate(std::vector<int>& work) {
    for (size_t i = 0; i < work.size() && !contradiction_; ++i)
      check_vertex(work[i], work);
    return !contradiction_;
  }

  bool leaf_valid() const {
    if (rule_ == subgraph_rule::exact_degree) return true;  // by propagation
    // Components of the chosen set are paths and cycles; accept exactly
    // vertices, edges, and cycles, so a degree-1 vertex must pair with a
    // degree-1 neighbor.
    for (int v = 0; v < g_.n(); ++v) {
      if (status_[v] != kIn || in_deg_[v] != 1) continue;
      bool ok = false;
      g_.adj(v).for_each([&](int u) {
        if (status_[u] == kIn && in_deg_[u] == 1) ok = true;
      });
      if (!ok) return false;
    }
    return true;
  }

  void search() {
    if (++explored_ > budget_)
      throw budget_error("search budget of " + std::to_string(budget_) +
                         " nodes exhausted");
    if (n_in_ + n_undecided_ <= best_) return;  // cannot strictly improve
    int v = -1;
    for (int u = 0; u < g_.n(); ++u)
      if (status_[u] == kUndecided) {
        v = u;
        break;
      }
    if (v == -1) {
      if (n_in_ > best_ && leaf_valid()) {
        best_ = n_in_;
        for (int u = 0; u < g_.n(); ++u)
          if (status_[u] == kIn)
            best_set_.set(u);
          else
            best_set_.reset(u);
      }
      return;
    }
    size_t mark = trail_.size();
    for (int8_t st : {kIn, kOut}) {
      std::vector<int> work;
      force(v, st, work);
      if (propagate(work)) search();
      undo_to(mark);
    }
  }
};

}  // namespace detail

// Largest induced subgraph in which every vertex has exactly s neighbors
// inside. Value 0 with an empty certificate means no nonempty subgraph
// qualifies (for s = 2: the graph has no induced cycle at all).
inline OracleResult max_induced_regular(const Graph& g, int s,
                                        const OracleOptions& opt = {}) {
  if (s < 0) throw precondition_error("regularity parameter must be >= 0");
  detail::regular_search rs(g, detail::subgraph_rule::exact_degree, s, opt.budget);
  return rs.run();
}

inline OracleResult independence_number(const Graph& g, const OracleOptions& opt = {}) {
  return max_induced_regular(g, 0, opt);
}

// Maximum order of an induced 2-regular subgraph, i.e. a largest union of
// pairwise nonadjacent induced cycles.
inline OracleResult c_ind_exact(const Graph& g, const OracleOptions& opt = {}) {
  return max_induced_regular(g, 2, opt);
}

// Largest induced subgraph whose components are single vertices, single
// edges, and cycles.
inline OracleResult max_mixed_regular(const Graph& g, const OracleOptions& opt = {}) {
  detail::regular_search rs(g, detail::subgraph_rule::vertex_edge_cycle_mix, 2,
                            opt.budget);
  return rs.run();
}

// For an r-regular graph: n minus the largest induced s-regular subgraph
// over all s < r. The certificate is the complement of that subgraph; it
// dominates every outside vertex exactly r - s times.
inline OracleResult fair_domination_number_regular(const Graph& g,
                                                   const OracleOptions& opt = {}) {
  if (g.n() == 0) throw precondition_error("empty graph");
  int r = g.degree(0);
  for (int v = 1; v < g.n(); ++v)
    if (g.degree(v) != r) throw precondition_error("graph is not regular");
  int best = 0;
  Bitset best_set(g.n());
  long long explored = 0;
  for (int s = 0; s < r; ++s) {
    auto res = max_induced_regular(g, s, opt);
    explored += res.explored;
    if (res.value > best) {
      best = res.value;
      best_set = res.certificate;
    }
  }
  OracleResult out;
  out.value = g.n() - best;
  out.certificate = best_set.complemented();
  out.explored = explored;
  return out;
}

}  // namespace cind
