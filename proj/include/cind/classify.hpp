#pragma once

// Classification of 2-connected subcubic graphs of chordality at most 4
// against the block catalogue. Small kinds are matched by a generic
// lex-first induced-embedding search; ladder kinds of larger order are
// recognized by a deterministic rung walk.

#include <algorithm>
#include <optional>
#include <vector>

#include "cind/blocks.hpp"
#include "cind/cycles.hpp"
#include "cind/families.hpp"
#include "cind/graph.hpp"

namespace cind {

// Lex-first induced embedding of pattern into host: returns img with
// img[t] = host vertex of pattern vertex t, such that host restricted to the
// image induces exactly the pattern's edges. The first embedding in
// lexicographic order of the image vector is returned.
inline std::optional<std::vector<int>> find_induced_embedding(const Graph& host,
                                                              const Graph& pattern) {
  int p = pattern.n();
  if (p > host.n()) return std::nullopt;
  std::vector<int> img(p, -1);
  Bitset used(host.n());
  auto rec = [&](auto&& self, int t) -> bool {
    if (t == p) return true;
    for (int c = 0; c < host.n(); ++c) {
      if (used.test(c)) continue;
      if (host.degree(c) < pattern.degree(t)) continue;
      bool ok = true;
      for (int s = 0; s < t && ok; ++s)
        if (host.has_edge(img[s], c) != pattern.has_edge(s, t)) ok = false;
      if (!ok) continue;
      img[t] = c;
      used.set(c);
      if (self(self, t + 1)) return true;
      used.reset(c);
      img[t] = -1;
    }
    return false;
  };
  if (rec(rec, 0)) return img;
  return std::nullopt;
}

struct Classification {
  BlockKind kind;
  std::vector<int> embedding;  // embedding[t] = host vertex of template vertex t
};

namespace detail {

inline bool embedding_matches(const Graph& host, const Graph& templ,
                              const std::vector<int>& emb) {
  if (host.n() != templ.n() || host.m() != templ.m()) return false;
  if (static_cast<int>(emb.size()) != templ.n()) return false;
  Bitset seen(host.n());
  for (int v : emb) {
    if (v < 0 || v >= host.n() || seen.test(v)) return false;
    seen.set(v);
  }
  for (auto [u, v] : templ.edges())
    if (!host.has_edge(emb[u], emb[v])) return false;
  return true;  // equal edge counts force the edge map to be a bijection
}

inline bool has_triangle(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (g.adj(u).intersects(g.adj(v))) return true;
  return false;
}

// Walks the rung sequence of a ladder-family graph. Starting from the rung
// (a, b) with the given already-visited predecessors, extends rung by rung
// until the stop pair is reached. Returns the two rails, or nullopt if the
// walk gets stuck.
struct RailWalk {
  std::vector<int> rail_a, rail_b;
};

inline std::optional<RailWalk> walk_rails(const Graph& g, int a0, int b0, int prev_a,
                                          int prev_b, int stop_x, int stop_y) {
  RailWalk w;
  int a = a0, b = b0;
  if (!g.has_edge(a, b)) return std::nullopt;
  w.rail_a.push_back(a);
  w.rail_b.push_back(b);
  int guard = g.n() + 2;
  while (!((a == stop_x && b == stop_y) || (a == stop_y && b == stop_x))) {
    if (--guard < 0) return std::nullopt;
    auto step = [&](int cur, int other) -> int {
      int next = -1;
      for (int u : g.neighbors(cur)) {
        if (u == other || u == prev_a || u == prev_b) continue;
        if (std::find(w.rail_a.begin(), w.rail_a.end(), u) != w.rail_a.end()) continue;
        if (std::find(w.rail_b.begin(), w.rail_b.end(), u) != w.rail_b.end()) continue;
        if (next != -1) return -2;  // ambiguous
        next = u;
      }
      return next;
    };
    int na = step(a, b), nb = step(b, a);
    if (na < 0 || nb < 0 || na == nb) return std::nullopt;
    if (!g.has_edge(na, nb)) return std::nullopt;
    a = na;
    b = nb;
    w.rail_a.push_back(a);
    w.rail_b.push_back(b);
  }
  return w;
}

inline std::optional<Classification> recognize_ladder_family(const Graph& g) {
  int n = g.n();
  std::vector<int> deg2;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) == 2) deg2.push_back(v);
    else if (g.degree(v) != 3) return std::nullopt;
  }
  std::vector<int> apexes;
  for (int v : deg2) {
    auto nb = g.neighbors(v);
    if (g.has_edge(nb[0], nb[1])) apexes.push_back(v);
  }
  auto assemble_result = [&](BlockTag tag, const RailWalk& w,
                             std::vector<int> extra) -> std::optional<Classification> {
    int k = static_cast<int>(w.rail_a.size());
    BlockKind kind{tag, k};
    std::vector<int> emb;
    emb.insert(emb.end(), w.rail_a.begin(), w.rail_a.end());
    emb.insert(emb.end(), w.rail_b.begin(), w.rail_b.end());
    emb.insert(emb.end(), extra.begin(), extra.end());
    if (!embedding_matches(g, family_graph(kind), emb)) return std::nullopt;
    return Classification{kind, std::move(emb)};
  };
  if (deg2.size() == 4 && apexes.empty()) {
    // plain ladder: corners pair up via the two end rungs
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < deg2.size(); ++i)
      for (std::size_t j = i + 1; j < deg2.size(); ++j)
        if (g.has_edge(deg2[i], deg2[j])) pairs.emplace_back(deg2[i], deg2[j]);
    if (pairs.size() != 2) return std::nullopt;
    auto [x, y] = pairs[0];  // deg2 ascending, so pairs[0] holds the minimum corner
    auto walk = walk_rails(g, std::min(x, y), std::max(x, y), -1, -1, pairs[1].first,
                           pairs[1].second);
    if (!walk) return std::nullopt;
    return assemble_result(BlockTag::ladder, *walk, {});
  }
  if (deg2.size() == 3 && apexes.size() == 1) {
    int apex = apexes[0];
    std::vector<int> corners;
    for (int v : deg2)
      if (v != apex) corners.push_back(v);
    if (!g.has_edge(corners[0], corners[1])) return std::nullopt;
    auto an = g.neighbors(apex);
    auto walk = walk_rails(g, corners[0], corners[1], -1, -1, an[0], an[1]);
    if (!walk) return std::nullopt;
    // rail a must end at the apex's first rail neighbor; embedding order fixes it
    std::vector<int> extra{apex};
    return assemble_result(BlockTag::ladder_prime, *walk, extra);
  }
  if (deg2.size() == 2 && apexes.size() == 2) {
    int apex_low = std::min(apexes[0], apexes[1]);
    int apex_high = std::max(apexes[0], apexes[1]);
    auto low_nb = g.neighbors(apex_low);
    auto high_nb = g.neighbors(apex_high);
    auto walk = walk_rails(g, std::min(low_nb[0], low_nb[1]),
                           std::max(low_nb[0], low_nb[1]), apex_low, apex_low,
                           high_nb[0], high_nb[1]);
    if (!walk) return std::nullopt;
    return assemble_result(BlockTag::ladder_double_prime, *walk,
                           {apex_high, apex_low});
  }
  return std::nullopt;
}

inline std::optional<Classification> classify_small(const Graph& g, BlockKind kind) {
  Graph templ = family_graph(kind);
  if (g.n() != templ.n() || g.m() != templ.m()) return std::nullopt;
  auto emb = find_induced_embedding(g, templ);
  if (!emb) return std::nullopt;
  return Classification{kind, *emb};
}

}  // namespace detail

// Classifies a 2-connected subcubic graph of chordality at most 4 as one of
// the catalogued block kinds, with an explicit template embedding.
// Preconditions are checked; a graph passing them but matching no kind is an
// internal consistency failure, since the structure theory asserts totality.
inline Classification classify_2connected(const Graph& g) {
  if (!is_subcubic(g)) throw precondition_error("classify: graph is not subcubic");
  if (!is_two_connected(g))
    throw precondition_error("classify: graph is not 2-connected");
  if (!is_4_chordal(g))
    throw precondition_error("classify: graph has an induced cycle longer than 4");
  int n = g.n(), m = g.m();
  std::optional<Classification> res;
  if (n == 3) {
    res = detail::classify_small(g, {BlockTag::k3, 0});
  } else if (n == 4) {
    if (m == 6) res = detail::classify_small(g, {BlockTag::k4, 0});
    else if (m == 5) res = detail::classify_small(g, {BlockTag::diamond, 0});
    else if (m == 4) res = detail::classify_small(g, {BlockTag::ladder, 2});
  } else if (n == 5) {
    if (m == 7) res = detail::classify_small(g, {BlockTag::diamond_prime, 0});
    else if (m == 6)
      res = detail::classify_small(g, detail::has_triangle(g)
                                          ? BlockKind{BlockTag::ladder_prime, 2}
                                          : BlockKind{BlockTag::k23, 0});
  } else if (n == 6) {
    if (m == 9)
      res = detail::classify_small(g, detail::has_triangle(g)
                                          ? BlockKind{BlockTag::prism, 0}
                                          : BlockKind{BlockTag::k33, 0});
    else if (m == 8)
      res = detail::classify_small(
          g, detail::has_triangle(g) ? BlockKind{BlockTag::ladder_double_prime, 2}
                                     : BlockKind{BlockTag::k33_minus, 0});
    else if (m == 7)
      res = detail::classify_small(g, {BlockTag::ladder, 3});
  } else {
    res = detail::recognize_ladder_family(g);
  }
  if (!res)
    throw internal_error(
        "classify: 2-connected subcubic graph of chordality <= 4 matches no "
        "catalogued block kind (n=" +
        std::to_string(n) + ", m=" + std::to_string(m) + ")");
  if (!detail::embedding_matches(g, family_graph(res->kind), res->embedding))
    throw internal_error("classify: produced embedding fails verification");
  return *res;
}

}  // namespace cind
