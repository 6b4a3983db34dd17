#pragma once

// Immutable simple undirected graph on vertex ids 0..n-1 with bitset
// adjacency rows, plus the small derived quantities used everywhere:
// connectivity, cyclomatic number, closed neighborhoods, vertex deletion
// with an id remap, and degree classification.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cind/bitset.hpp"

namespace cind {

class build_error : public std::invalid_argument {
 public:
  enum class kind { endpoint_out_of_range, self_loop, duplicate_edge };

  build_error(kind k, const std::string& msg) : std::invalid_argument(msg), kind_(k) {}
  kind which() const { return kind_; }

 private:
  kind kind_;
};

// Violated caller-facing precondition (wrong graph class, bad parameter).
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A re-verification the theory says cannot fail did fail.
struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

class Graph {
 public:
  Graph() = default;

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw precondition_error("vertex count must be nonnegative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw build_error(build_error::kind::endpoint_out_of_range,
                          "edge (" + std::to_string(u) + "," + std::to_string(v) +
                              ") out of range for n=" + std::to_string(n));
      if (u == v)
        throw build_error(build_error::kind::self_loop,
                          "self-loop at vertex " + std::to_string(u));
      if (g.adj_[u].test(v))
        throw build_error(build_error::kind::duplicate_edge,
                          "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
      g.adj_[u].set(v);
      g.adj_[v].set(u);
      ++g.m_;
    }
    return g;
  }

  int n() const { return n_; }
  int m() const { return m_; }

  const Bitset& adj(int v) const { return adj_[v]; }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }

  // Edges as (u,v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> e;
    e.reserve(m_);
    for (int u = 0; u < n_; ++u)
      adj_[u].for_each([&](int v) {
        if (u < v) e.emplace_back(u, v);
      });
    return e;
  }

  std::vector<int> neighbors(int v) const { return adj_[v].to_vector(); }

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<Bitset> adj_;
};

inline Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  return Graph::from_edges(n, edges);
}

inline int kappa(const Graph& g) {
  int n = g.n();
  std::vector<int> comp(n, -1);
  int comps = 0;
  std::vector<int> stack;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    ++comps;
    comp[s] = comps;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      g.adj(v).for_each([&](int u) {
        if (comp[u] < 0) {
          comp[u] = comps;
          stack.push_back(u);
        }
      });
    }
  }
  return comps;
}

inline bool is_connected(const Graph& g) { return g.n() <= 1 || kappa(g) == 1; }

// mu(G) = m + kappa - n, the number of independent cycles.
inline int cyclomatic_number(const Graph& g) { return g.m() + kappa(g) - g.n(); }

inline Bitset closed_neighborhood(const Graph& g, const Bitset& s) {
  if (s.size_bits() != g.n()) throw precondition_error("vertex set size mismatch");
  Bitset r = s;
  s.for_each([&](int v) { r |= g.adj(v); });
  return r;
}

struct InducedSubgraph {
  Graph graph;
  std::vector<int> old_to_new;  // -1 for removed vertices
  std::vector<int> new_to_old;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const Bitset& keep) {
  if (keep.size_bits() != g.n()) throw precondition_error("vertex set size mismatch");
  InducedSubgraph r;
  r.old_to_new.assign(g.n(), -1);
  keep.for_each([&](int v) {
    r.old_to_new[v] = int(r.new_to_old.size());
    r.new_to_old.push_back(v);
  });
  std::vector<std::pair<int, int>> edges;
  for (int v : r.new_to_old)
    (g.adj(v) & keep).for_each([&](int u) {
      if (v < u) edges.emplace_back(r.old_to_new[v], r.old_to_new[u]);
    });
  r.graph = Graph::from_edges(int(r.new_to_old.size()), edges);
  return r;
}

inline InducedSubgraph delete_vertices(const Graph& g, const Bitset& del) {
  return induced_subgraph(g, del.complemented());
}

enum class DegreeClass { cubic, subcubic, neither };

struct DegreeCheck {
  DegreeClass cls;
  std::vector<int> degree_sequence;  // ascending
};

inline DegreeCheck degree_check(const Graph& g) {
  DegreeCheck r;
  r.degree_sequence.resize(g.n());
  bool all3 = true, max3 = true;
  for (int v = 0; v < g.n(); ++v) {
    int d = g.degree(v);
    r.degree_sequence[v] = d;
    if (d != 3) all3 = false;
    if (d > 3) max3 = false;
  }
  std::sort(r.degree_sequence.begin(), r.degree_sequence.end());
  r.cls = all3 && g.n() > 0 ? DegreeClass::cubic
                            : (max3 ? DegreeClass::subcubic : DegreeClass::neither);
  return r;
}

inline bool is_cubic(const Graph& g) { return degree_check(g).cls == DegreeClass::cubic; }

inline bool is_subcubic(const Graph& g) {
  auto c = degree_check(g).cls;
  return c == DegreeClass::cubic || c == DegreeClass::subcubic;
}

}  // namespace cind
