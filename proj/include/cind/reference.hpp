#pragma once

// Naive exhaustive-enumeration counterparts of the branch-and-bound oracle.
// Every subset of vertices is tested directly against the subgraph predicate,
// so these run in Theta(2^n poly(n)) and are guarded to n <= 20. They exist
// solely as an independent source of truth for the test suite.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "cind/graph.hpp"

namespace cind {
namespace reference {

struct NaiveResult {
  int value = 0;
  Bitset certificate;
};

namespace detail {

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  if (g.n() > 20) throw precondition_error("naive oracle limited to n <= 20");
  std::vector<std::uint32_t> adj(g.n(), 0);
  for (int v = 0; v < g.n(); ++v)
    g.adj(v).for_each([&](int u) { adj[v] |= (std::uint32_t{1} << u); });
  return adj;
}

// Lex order on vertex sets: a < b iff the lowest-index vertex on which they
// differ belongs to a.
inline bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
  std::uint32_t d = a ^ b;
  if (d == 0) return false;
  std::uint32_t low = d & (~d + 1);
  return (a & low) != 0;
}

inline Bitset mask_to_bitset(std::uint32_t mask, int n) {
  Bitset s(n);
  for (int v = 0; v < n; ++v)
    if (mask & (std::uint32_t{1} << v)) s.set(v);
  return s;
}

template <typename Pred>
NaiveResult best_subset(const Graph& g, Pred&& valid) {
  auto adj = adjacency_masks(g);
  int n = g.n();
  std::uint32_t best = 0;
  int best_count = 0;
  std::uint32_t limit =
      n >= 32 ? 0 : (std::uint32_t{1} << n);  // n <= 20 enforced above
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    int c = __builtin_popcount(mask);
    if (c < best_count) continue;
    if (!valid(mask, adj)) continue;
    if (c > best_count || (c == best_count && mask_lex_less(mask, best))) {
      best = mask;
      best_count = c;
    }
  }
  return NaiveResult{best_count, mask_to_bitset(best, n)};
}

}  // namespace detail

// Largest induced s-regular subgraph by full enumeration.
inline NaiveResult naive_max_induced_regular(const Graph& g, int s) {
  if (s < 0) throw precondition_error("regularity degree must be >= 0");
  return detail::best_subset(
      g, [s](std::uint32_t mask, const std::vector<std::uint32_t>& adj) {
        std::uint32_t rest = mask;
        while (rest) {
          int v = __builtin_ctz(rest);
          rest &= rest - 1;
          if (__builtin_popcount(adj[v] & mask) != s) return false;
        }
        return true;
      });
}

inline NaiveResult naive_independence_number(const Graph& g) {
  return naive_max_induced_regular(g, 0);
}

inline NaiveResult naive_c_ind(const Graph& g) {
  return naive_max_induced_regular(g, 2);
}

// Largest induced subgraph whose components are vertices, edges, and cycles:
// in-degrees at most 2, and every in-degree-1 vertex is matched to an
// in-degree-1 neighbor.
inline NaiveResult naive_max_mixed_regular(const Graph& g) {
  return detail::best_subset(
      g, [](std::uint32_t mask, const std::vector<std::uint32_t>& adj) {
        std::uint32_t rest = mask;
        while (rest) {
          int v = __builtin_ctz(rest);
          rest &= rest - 1;
          std::uint32_t in = adj[v] & mask;
          int d = __builtin_popcount(in);
          if (d > 2) return false;
          if (d == 1) {
            int u = __builtin_ctz(in);
            if (__builtin_popcount(adj[u] & mask) != 1) return false;
          }
        }
        return true;
      });
}

// n minus the largest induced s-regular order over s < r, for r-regular G.
inline NaiveResult naive_fair_domination_regular(const Graph& g) {
  auto dc = degree_check(g);
  for (int v = 1; v < g.n(); ++v)
    if (dc.degree_sequence[v] != dc.degree_sequence[0])
      throw precondition_error("fair domination oracle requires a regular graph");
  int r = g.n() == 0 ? 0 : dc.degree_sequence[0];
  if (r == 0) return NaiveResult{g.n(), Bitset(g.n())};
  NaiveResult best;
  best.value = -1;
  for (int s = 0; s < r; ++s) {
    auto res = naive_max_induced_regular(g, s);
    if (res.value > best.value) best = res;
  }
  return NaiveResult{g.n() - best.value, best.certificate.complemented()};
}

// All induced cycles as sorted vertex sets, ordered lexicographically: a
// subset induces a cycle iff it is connected and 2-regular.
inline std::vector<std::vector<int>> naive_induced_cycle_sets(const Graph& g) {
  auto adj = detail::adjacency_masks(g);
  int n = g.n();
  std::vector<std::vector<int>> out;
  std::uint32_t limit = n >= 32 ? 0 : (std::uint32_t{1} << n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    if (__builtin_popcount(mask) < 3) continue;
    bool two_regular = true;
    std::uint32_t rest = mask;
    while (rest && two_regular) {
      int v = __builtin_ctz(rest);
      rest &= rest - 1;
      if (__builtin_popcount(adj[v] & mask) != 2) two_regular = false;
    }
    if (!two_regular) continue;
    // connectivity over the subset
    std::uint32_t start = mask & (~mask + 1);
    std::uint32_t seen = start, frontier = start;
    while (frontier) {
      std::uint32_t next = 0;
      std::uint32_t f = frontier;
      while (f) {
        int v = __builtin_ctz(f);
        f &= f - 1;
        next |= adj[v] & mask & ~seen;
      }
      seen |= next;
      frontier = next;
    }
    if (seen != mask) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint32_t{1} << v)) vs.push_back(v);
    out.push_back(std::move(vs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace reference
}  // namespace cind
