#pragma once

// Named example graphs and seeded random generators. All randomness flows
// through a 64-bit Mersenne engine whose output sequence is fixed by the
// standard, so identical seeds give identical graphs on every platform.

#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "cind/blocktree.hpp"
#include "cind/families.hpp"
#include "cind/graph.hpp"

namespace cind {

struct generation_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Graph cycle_graph(int n) {
  if (n < 3) throw precondition_error("cycle needs >= 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return build_graph(n, e);
}

inline Graph path_graph(int n) {
  if (n < 1) throw precondition_error("path needs >= 1 vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return build_graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return build_graph(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return build_graph(a + b, e);
}

inline Graph star_graph(int leaves) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return build_graph(leaves + 1, e);
}

// Outer 5-cycle 0..4, spokes i -> i+5, inner 5-cycle with step 2.
inline Graph petersen() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, ((i + 2) % 5) + 5);
  }
  return build_graph(10, e);
}

// Two k-cycles joined rung-wise, with consecutive rung pairs crossed: vertex
// i on the top cycle joins vertex k + (i xor 1) below. Cubic on 2k vertices.
inline Graph crossed_prism(int k) {
  if (k < 4 || k % 2 != 0)
    throw precondition_error("crossed prism needs an even cycle length >= 4");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(k + i, k + (i + 1) % k);
    e.emplace_back(i, k + (i ^ 1));
  }
  return build_graph(2 * k, e);
}

// Ladder-family constructor by tag; k is the rung count.
inline Graph ladder_family(BlockTag tag, int k) {
  if (!is_ladder_tag(tag))
    throw precondition_error("ladder_family requires a ladder tag");
  return family_graph({tag, k});
}

inline const std::vector<std::string>& named_graph_names() {
  static const std::vector<std::string> names = {
      "K3",  "K4",  "D",        "Dprime",        "Prism",
      "K23", "K33", "K33minus", "Petersen",      "CrossedPrism6"};
  return names;
}

inline Graph named(const std::string& name) {
  if (name == "Petersen") return petersen();
  if (name == "CrossedPrism6") return crossed_prism(6);
  for (const auto& s :
       {"K3", "K4", "D", "Dprime", "Prism", "K23", "K33", "K33minus"})
    if (name == s) return family_graph(kind_from_string(name));
  throw precondition_error("unknown graph name: " + name);
}

namespace detail {

inline int rand_below(std::mt19937_64& rng, int bound) {
  return static_cast<int>(rng() % static_cast<unsigned long long>(bound));
}

}  // namespace detail

// Uniform-ish random connected cubic graph on n vertices via the pairing
// model: 3n half-edges are shuffled and paired; draws with loops, parallel
// edges, or a disconnected result are rejected. Deterministic in (n, seed).
inline Graph random_cubic_connected(int n, unsigned long long seed,
                                    int max_attempts = 10000) {
  if (n < 4 || n % 2 != 0)
    throw precondition_error("cubic graphs need even order >= 4");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<int> pts(3 * n);
    for (int i = 0; i < 3 * n; ++i) pts[i] = i / 3;
    for (int i = 3 * n - 1; i > 0; --i)
      std::swap(pts[i], pts[detail::rand_below(rng, i + 1)]);
    std::vector<std::pair<int, int>> edges;
    bool ok = true;
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    for (int i = 0; i < 3 * n && ok; i += 2) {
      int u = pts[i], v = pts[i + 1];
      if (u == v || seen[u][v]) ok = false;
      else {
        seen[u][v] = seen[v][u] = true;
        edges.emplace_back(u, v);
      }
    }
    if (!ok) continue;
    Graph g = build_graph(n, edges);
    if (is_connected(g)) return g;
  }
  throw generation_error("random cubic generation exhausted its attempt budget");
}

// Random tree on the given order with a maximum-degree cap: each new vertex
// attaches to a uniformly random earlier vertex that still has room.
inline Graph random_tree(int order, unsigned long long seed, int max_degree) {
  if (order < 1) throw precondition_error("tree order must be >= 1");
  if (max_degree < 1 && order > 1)
    throw precondition_error("degree cap too small for the order");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg(order, 0);
  for (int v = 1; v < order; ++v) {
    std::vector<int> options;
    for (int u = 0; u < v; ++u)
      if (deg[u] < max_degree) options.push_back(u);
    if (options.empty()) throw generation_error("degree cap blocked tree growth");
    int u = options[detail::rand_below(rng, static_cast<int>(options.size()))];
    edges.emplace_back(u, v);
    ++deg[u];
    ++deg[v];
  }
  return build_graph(order, edges);
}

// Random connected cubic graph of chordality at most 4, built from a random
// decomposition: a random tree with degrees <= 4, a random capacity-matching
// kind at every node, and shuffled slot assignments.
inline Graph random_4chordal_cubic(int tree_order, unsigned long long seed) {
  if (tree_order < 2) throw precondition_error("tree order must be >= 2");
  std::mt19937_64 rng(seed);
  Graph tree = random_tree(tree_order, rng(), 4);
  BlockDecomposition dec;
  dec.tree = tree;
  for (int v = 0; v < tree.n(); ++v) {
    int d = tree.degree(v);
    BlockKind kind;
    switch (d) {
      case 1: kind = {BlockTag::diamond_prime, 0}; break;
      case 2: {
        int pick = detail::rand_below(rng, 5);
        if (pick == 0) kind = {BlockTag::diamond, 0};
        else if (pick == 1) kind = {BlockTag::k33_minus, 0};
        else kind = {BlockTag::ladder_double_prime, 2 + (pick - 2)};
        break;
      }
      case 3: {
        int pick = detail::rand_below(rng, 6);
        if (pick == 0) kind = {BlockTag::k3, 0};
        else if (pick == 1) kind = {BlockTag::k23, 0};
        else if (pick == 2) kind = {BlockTag::plain_vertex, 0};
        else kind = {BlockTag::ladder_prime, 2 + (pick - 3)};
        break;
      }
      case 4: kind = {BlockTag::ladder, 2 + detail::rand_below(rng, 3)}; break;
      default: throw internal_error("random tree exceeded its degree cap");
    }
    dec.labels.push_back(kind);
  }
  // random slot assignment: shuffle each node's free-slot stack
  std::vector<std::vector<int>> free_slots(tree.n());
  for (int v = 0; v < tree.n(); ++v) {
    int cap = attachment_capacity(dec.labels[v]);
    for (int i = 0; i < cap; ++i) free_slots[v].push_back(i);
    for (int i = cap - 1; i > 0; --i)
      std::swap(free_slots[v][i], free_slots[v][detail::rand_below(rng, i + 1)]);
  }
  for (auto [u, v] : tree.edges()) {
    dec.attachments[{u, v}] = {free_slots[u].back(), free_slots[v].back()};
    free_slots[u].pop_back();
    free_slots[v].pop_back();
  }
  return assemble(dec).graph;
}

}  // namespace cind
