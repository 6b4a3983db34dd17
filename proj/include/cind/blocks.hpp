#pragma once

// Blocks (biconnected components), cutvertices and bridges via the classic
// lowpoint DFS with an edge stack. Every edge lies in exactly one block; a
// bridge forms a K2 block of its own.

#include <utility>
#include <vector>

#include "cind/graph.hpp"

namespace cind {

struct BlockStructure {
  std::vector<Bitset> blocks;  // vertex sets, K2 blocks included
  Bitset cutvertices;
  std::vector<std::pair<int, int>> bridges;  // u < v
};

inline BlockStructure block_structure(const Graph& g) {
  int n = g.n();
  BlockStructure bs;
  bs.cutvertices = Bitset(n);

  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;

  // Iterative DFS; each frame holds the vertex and its neighbor cursor.
  std::vector<int> nbrs_buf;
  struct Frame {
    int v;
    std::vector<int> nbrs;
    size_t idx = 0;
    int children = 0;
  };

  auto pop_block = [&](int u, int v) {
    Bitset blk(n);
    int sz = 0;
    while (!edge_stack.empty()) {
      auto [a, b] = edge_stack.back();
      edge_stack.pop_back();
      blk.set(a);
      blk.set(b);
      ++sz;
      if ((a == u && b == v) || (a == v && b == u)) break;
    }
    bs.blocks.push_back(blk);
    if (sz == 1) {
      auto [a, b] = std::minmax(u, v);
      bs.bridges.emplace_back(a, b);
    }
  };

  for (int s = 0; s < n; ++s) {
    if (disc[s] >= 0) continue;
    std::vector<Frame> stack;
    stack.push_back({s, g.neighbors(s)});
    disc[s] = low[s] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.idx < f.nbrs.size()) {
        int u = f.nbrs[f.idx++];
        if (disc[u] < 0) {
          parent[u] = f.v;
          ++f.children;
          edge_stack.emplace_back(f.v, u);
          disc[u] = low[u] = timer++;
          stack.push_back({u, g.neighbors(u)});
        } else if (u != parent[f.v] && disc[u] < disc[f.v]) {
          edge_stack.emplace_back(f.v, u);
          low[f.v] = std::min(low[f.v], disc[u]);
        }
      } else {
        int v = f.v;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[p] = std::min(low[p], low[v]);
          if (low[v] >= disc[p]) {
            pop_block(p, v);
            if (parent[p] != -1 || stack.back().children > 1) bs.cutvertices.set(p);
          }
        }
      }
    }
  }
  return bs;
}

inline bool is_two_connected(const Graph& g) {
  if (g.n() < 3 || !is_connected(g)) return false;
  auto bs = block_structure(g);
  return bs.blocks.size() == 1 && bs.blocks[0].count() == g.n();
}

}  // namespace cind
