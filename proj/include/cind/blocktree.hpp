#pragma once

// Tree-of-blocks view of a connected cubic graph with chordality at most 4:
// every nontrivial block is one of the catalogued kinds, cutvertices whose
// three edges are all bridges stand alone as plain vertices, and the bridges
// form the tree edges. Assembly inverts the view: given a tree whose nodes
// carry kinds with attachment capacity equal to their tree degree, build the
// cubic graph by joining template slots with bridges.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cind/blocks.hpp"
#include "cind/classify.hpp"
#include "cind/families.hpp"
#include "cind/graph.hpp"

namespace cind {

struct BlockDecomposition {
  Graph tree;
  std::vector<BlockKind> labels;  // one per tree node
  // per tree edge (u,v) with u < v: the slot index each endpoint consumes,
  // indexing into family_slots(labels[u]) resp. family_slots(labels[v])
  std::map<std::pair<int, int>, std::pair<int, int>> attachments;

  // Populated by decompose: host vertices of each tree node and the template
  // embedding of each node's unit (for a plain vertex, the single vertex).
  std::vector<Bitset> unit_vertices;
  std::vector<std::vector<int>> embeddings;
};

namespace detail {

inline void check_decomposition_shape(const BlockDecomposition& dec) {
  const Graph& t = dec.tree;
  if (t.n() < 2) throw precondition_error("decomposition tree must have >= 2 nodes");
  if (t.m() != t.n() - 1 || !is_connected(t))
    throw precondition_error("decomposition tree is not a tree");
  if (static_cast<int>(dec.labels.size()) != t.n())
    throw precondition_error("decomposition needs one label per tree node");
  for (int v = 0; v < t.n(); ++v)
    if (attachment_capacity(dec.labels[v]) != t.degree(v))
      throw precondition_error(
          "attachment capacity of " + kind_to_string(dec.labels[v]) +
          " differs from tree degree at node " + std::to_string(v));
}

}  // namespace detail

struct Assembly {
  Graph graph;
  std::vector<int> offset;  // host id of template vertex 0 of each tree node
  BlockDecomposition used;  // input decomposition with attachments filled in
};

// Builds the cubic graph described by a decomposition. When attachments are
// empty they are assigned canonically: tree edges in ascending order consume
// the lowest free slot at each endpoint. Explicit attachments must use every
// slot index exactly once per node.
inline Assembly assemble(const BlockDecomposition& dec) {
  detail::check_decomposition_shape(dec);
  const Graph& t = dec.tree;
  auto tree_edges = t.edges();
  std::map<std::pair<int, int>, std::pair<int, int>> attach = dec.attachments;
  if (attach.empty()) {
    std::vector<int> next_free(t.n(), 0);
    for (auto e : tree_edges)
      attach[e] = {next_free[e.first]++, next_free[e.second]++};
  }
  if (attach.size() != tree_edges.size())
    throw precondition_error("decomposition needs one attachment per tree edge");
  // validate slot usage: each node's slots 0..cap-1 appear exactly once
  std::vector<std::vector<int>> used(t.n());
  for (auto e : tree_edges) {
    auto it = attach.find(e);
    if (it == attach.end())
      throw precondition_error("missing attachment for tree edge (" +
                               std::to_string(e.first) + "," +
                               std::to_string(e.second) + ")");
    used[e.first].push_back(it->second.first);
    used[e.second].push_back(it->second.second);
  }
  for (int v = 0; v < t.n(); ++v) {
    int cap = attachment_capacity(dec.labels[v]);
    std::vector<int> u = used[v];
    std::sort(u.begin(), u.end());
    for (int i = 0; i < cap; ++i)
      if (i >= static_cast<int>(u.size()) || u[i] != i)
        throw precondition_error("node " + std::to_string(v) +
                                 " does not use each slot exactly once");
  }

  std::vector<int> offset(t.n(), 0);
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < t.n(); ++v) {
    offset[v] = n;
    Graph templ = family_graph(dec.labels[v]);
    for (auto [a, b] : templ.edges()) edges.emplace_back(n + a, n + b);
    n += templ.n();
  }
  for (auto e : tree_edges) {
    auto [su, sv] = attach[e];
    int hu = offset[e.first] + family_slots(dec.labels[e.first])[su];
    int hv = offset[e.second] + family_slots(dec.labels[e.second])[sv];
    edges.emplace_back(hu, hv);
  }
  Assembly out;
  out.graph = build_graph(n, edges);
  out.offset = std::move(offset);
  out.used = dec;
  out.used.attachments = std::move(attach);
  out.used.unit_vertices.clear();
  out.used.embeddings.clear();
  for (int v = 0; v < t.n(); ++v) {
    Graph templ = family_graph(dec.labels[v]);
    Bitset unit(n);
    std::vector<int> emb(templ.n());
    for (int i = 0; i < templ.n(); ++i) {
      unit.set(out.offset[v] + i);
      emb[i] = out.offset[v] + i;
    }
    out.used.unit_vertices.push_back(std::move(unit));
    out.used.embeddings.push_back(std::move(emb));
  }
  return out;
}

// Decomposes a connected cubic graph of chordality at most 4 that has at
// least one cutvertex. The three 2-connected cubic members of the catalogue
// admit no decomposition and are rejected as exceptional.
inline BlockDecomposition decompose_4chordal(const Graph& g) {
  auto dc = degree_check(g);
  if (dc.cls != DegreeClass::cubic)
    throw precondition_error("decompose: graph is not cubic");
  if (!is_connected(g)) throw precondition_error("decompose: graph is not connected");
  if (!is_4_chordal(g))
    throw precondition_error("decompose: graph has an induced cycle longer than 4");
  if (is_two_connected(g)) {
    auto cls = classify_2connected(g);
    throw precondition_error("decompose: graph is 2-connected (exceptional " +
                             kind_to_string(cls.kind) + "), nothing to decompose");
  }

  BlockStructure bs = block_structure(g);
  // units: nontrivial blocks plus vertices lying in none of them
  struct Unit {
    Bitset vertices;
    int min_vertex;
  };
  std::vector<Unit> units;
  Bitset covered(g.n());
  for (auto& b : bs.blocks) {
    if (b.count() <= 2) continue;  // bridge blocks become tree edges instead
    units.push_back({b, b.first()});
    covered |= b;
  }
  for (int v = 0; v < g.n(); ++v)
    if (!covered.test(v)) {
      Bitset single(g.n());
      single.set(v);
      units.push_back({single, v});
    }
  std::sort(units.begin(), units.end(),
            [](const Unit& a, const Unit& b) { return a.min_vertex < b.min_vertex; });

  std::vector<int> unit_of(g.n(), -1);
  for (std::size_t i = 0; i < units.size(); ++i)
    units[i].vertices.for_each([&](int v) {
      if (unit_of[v] != -1)
        throw internal_error("decompose: vertex in two nontrivial blocks of a cubic graph");
      unit_of[v] = static_cast<int>(i);
    });

  BlockDecomposition dec;
  dec.labels.reserve(units.size());
  dec.embeddings.reserve(units.size());
  for (auto& u : units) {
    if (u.vertices.count() == 1) {
      dec.labels.push_back({BlockTag::plain_vertex, 0});
      dec.embeddings.push_back({u.min_vertex});
    } else {
      auto sub = induced_subgraph(g, u.vertices);
      auto cls = classify_2connected(sub.graph);
      if (attachment_capacity(cls.kind) == 0)
        throw internal_error("decompose: capacity-0 block inside a graph with bridges");
      dec.labels.push_back(cls.kind);
      std::vector<int> emb(cls.embedding.size());
      for (std::size_t i = 0; i < cls.embedding.size(); ++i)
        emb[i] = sub.new_to_old[cls.embedding[i]];
      dec.embeddings.push_back(std::move(emb));
    }
    dec.unit_vertices.push_back(u.vertices);
  }

  // tree edges from bridges; slot bookkeeping per unit
  auto bridges = bs.bridges;
  std::sort(bridges.begin(), bridges.end());
  std::vector<std::vector<bool>> slot_used(units.size());
  for (std::size_t i = 0; i < units.size(); ++i)
    slot_used[i].assign(attachment_capacity(dec.labels[i]), false);
  auto slot_for = [&](int unit, int host_vertex) -> int {
    auto slots = family_slots(dec.labels[unit]);
    const auto& emb = dec.embeddings[unit];
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if (slot_used[unit][i]) continue;
      if (emb[slots[i]] == host_vertex) {
        slot_used[unit][i] = true;
        return static_cast<int>(i);
      }
    }
    throw internal_error("decompose: bridge endpoint is not a free slot vertex");
  };
  std::vector<std::pair<int, int>> tree_edges;
  for (auto [x, y] : bridges) {
    int ux = unit_of[x], uy = unit_of[y];
    if (ux == uy) throw internal_error("decompose: bridge inside one unit");
    int sx = slot_for(ux, x), sy = slot_for(uy, y);
    auto key = std::minmax(ux, uy);
    std::pair<int, int> slots =
        ux < uy ? std::make_pair(sx, sy) : std::make_pair(sy, sx);
    tree_edges.emplace_back(key.first, key.second);
    dec.attachments[{key.first, key.second}] = slots;
  }
  dec.tree = build_graph(static_cast<int>(units.size()), tree_edges);
  for (std::size_t i = 0; i < units.size(); ++i)
    if (!slot_used[i].empty() &&
        !std::all_of(slot_used[i].begin(), slot_used[i].end(), [](bool b) { return b; }))
      throw internal_error("decompose: unused attachment slot at a unit");
  detail::check_decomposition_shape(dec);
  return dec;
}

// Extremal construction: given a tree with maximum degree 3 and order >= 2,
// replace each leaf by the capped diamond, each degree-2 node by the
// double-capped 3-rung ladder, and each degree-3 node by a triangle. The
// result is connected, cubic, 4-chordal, and meets the 5n/8 + 3/4 bound with
// equality.
inline Assembly generate_extremal(const Graph& tree) {
  if (tree.n() < 2) throw precondition_error("extremal tree must have order >= 2");
  if (tree.m() != tree.n() - 1 || !is_connected(tree))
    throw precondition_error("extremal input is not a tree");
  BlockDecomposition dec;
  dec.tree = tree;
  for (int v = 0; v < tree.n(); ++v) {
    switch (tree.degree(v)) {
      case 1: dec.labels.push_back({BlockTag::diamond_prime, 0}); break;
      case 2: dec.labels.push_back({BlockTag::ladder_double_prime, 3}); break;
      case 3: dec.labels.push_back({BlockTag::k3, 0}); break;
      default:
        throw precondition_error("extremal tree must have maximum degree 3");
    }
  }
  return assemble(dec);
}

}  // namespace cind
