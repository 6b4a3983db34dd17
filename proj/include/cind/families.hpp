#pragma once

// The catalogue of 2-connected building blocks that can appear in a connected
// cubic graph of chordality at most 4, plus the degenerate plain-vertex block
// used at cutvertices all of whose incident edges are bridges. Each kind
// carries a canonical template graph and an ordered list of attachment slots:
// the vertices of degree < 3 in the template, listed once per missing edge.

#include <string>
#include <vector>

#include "cind/graph.hpp"

namespace cind {

enum class BlockTag {
  k3,
  k4,
  diamond,
  diamond_prime,
  prism,
  k23,
  k33,
  k33_minus,
  ladder,
  ladder_prime,
  ladder_double_prime,
  plain_vertex,
};

// A concrete kind: the tag together with the ladder parameter k (rung count).
// k is meaningful only for the three ladder tags and is 0 otherwise.
struct BlockKind {
  BlockTag tag = BlockTag::plain_vertex;
  int k = 0;

  friend bool operator==(const BlockKind& a, const BlockKind& b) {
    return a.tag == b.tag && a.k == b.k;
  }
  friend bool operator!=(const BlockKind& a, const BlockKind& b) { return !(a == b); }
  friend bool operator<(const BlockKind& a, const BlockKind& b) {
    if (a.tag != b.tag) return a.tag < b.tag;
    return a.k < b.k;
  }
};

inline bool is_ladder_tag(BlockTag t) {
  return t == BlockTag::ladder || t == BlockTag::ladder_prime ||
         t == BlockTag::ladder_double_prime;
}

inline std::string kind_to_string(const BlockKind& kind) {
  switch (kind.tag) {
    case BlockTag::k3: return "K3";
    case BlockTag::k4: return "K4";
    case BlockTag::diamond: return "D";
    case BlockTag::diamond_prime: return "Dprime";
    case BlockTag::prism: return "Prism";
    case BlockTag::k23: return "K23";
    case BlockTag::k33: return "K33";
    case BlockTag::k33_minus: return "K33minus";
    case BlockTag::ladder: return "Ladder(" + std::to_string(kind.k) + ")";
    case BlockTag::ladder_prime: return "LadderPrime(" + std::to_string(kind.k) + ")";
    case BlockTag::ladder_double_prime:
      return "LadderDoublePrime(" + std::to_string(kind.k) + ")";
    case BlockTag::plain_vertex: return "PlainVertex";
  }
  throw internal_error("unknown block tag");
}

inline BlockKind kind_from_string(const std::string& s) {
  auto parse_k = [&](const std::string& prefix) -> int {
    // s looks like prefix + "(" + digits + ")"
    std::size_t open = prefix.size();
    if (s.size() < open + 3 || s[open] != '(' || s.back() != ')')
      throw precondition_error("malformed block kind: " + s);
    int k = 0;
    for (std::size_t i = open + 1; i + 1 < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9')
        throw precondition_error("malformed block kind: " + s);
      k = k * 10 + (s[i] - '0');
    }
    if (k < 2) throw precondition_error("ladder parameter must be >= 2");
    return k;
  };
  if (s == "K3") return {BlockTag::k3, 0};
  if (s == "K4") return {BlockTag::k4, 0};
  if (s == "D") return {BlockTag::diamond, 0};
  if (s == "Dprime") return {BlockTag::diamond_prime, 0};
  if (s == "Prism") return {BlockTag::prism, 0};
  if (s == "K23") return {BlockTag::k23, 0};
  if (s == "K33") return {BlockTag::k33, 0};
  if (s == "K33minus") return {BlockTag::k33_minus, 0};
  if (s == "PlainVertex") return {BlockTag::plain_vertex, 0};
  if (s.rfind("LadderDoublePrime", 0) == 0)
    return {BlockTag::ladder_double_prime, parse_k("LadderDoublePrime")};
  if (s.rfind("LadderPrime", 0) == 0)
    return {BlockTag::ladder_prime, parse_k("LadderPrime")};
  if (s.rfind("Ladder", 0) == 0) return {BlockTag::ladder, parse_k("Ladder")};
  throw precondition_error("unknown block kind: " + s);
}

// Number of bridge endpoints the block accepts; equals the number of missing
// half-edges in the template, and must equal the block's degree in the
// decomposition tree of a cubic host.
inline int attachment_capacity(const BlockKind& kind) {
  switch (kind.tag) {
    case BlockTag::k4:
    case BlockTag::k33:
    case BlockTag::prism: return 0;
    case BlockTag::diamond_prime: return 1;
    case BlockTag::diamond:
    case BlockTag::k33_minus:
    case BlockTag::ladder_double_prime: return 2;
    case BlockTag::k3:
    case BlockTag::k23:
    case BlockTag::ladder_prime:
    case BlockTag::plain_vertex: return 3;
    case BlockTag::ladder: return 4;
  }
  throw internal_error("unknown block tag");
}

namespace detail {

inline void require_ladder_k(const BlockKind& kind) {
  if (is_ladder_tag(kind.tag) && kind.k < 2)
    throw precondition_error("ladder parameter must be >= 2");
}

}  // namespace detail

// Canonical template graph for the kind. Ladder(k) has rails a_1..a_k =
// 0..k-1 and b_1..b_k = k..2k-1 with rungs a_i b_i; the primed variant adds
// an apex 2k adjacent to a_k and b_k, the double-primed variant further adds
// an apex 2k+1 adjacent to a_1 and b_1.
inline Graph family_graph(const BlockKind& kind) {
  detail::require_ladder_k(kind);
  using E = std::vector<std::pair<int, int>>;
  switch (kind.tag) {
    case BlockTag::k3: return build_graph(3, E{{0, 1}, {0, 2}, {1, 2}});
    case BlockTag::k4:
      return build_graph(4, E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case BlockTag::diamond:
      return build_graph(4, E{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case BlockTag::diamond_prime:
      return build_graph(5, E{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 4}});
    case BlockTag::prism:
      return build_graph(6, E{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5},
                              {0, 3}, {1, 4}, {2, 5}});
    case BlockTag::k23:
      return build_graph(5, E{{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    case BlockTag::k33:
      return build_graph(6, E{{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5},
                              {2, 3}, {2, 4}, {2, 5}});
    case BlockTag::k33_minus:
      return build_graph(6, E{{0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3},
                              {2, 4}, {2, 5}});
    case BlockTag::plain_vertex: return build_graph(1, E{});
    case BlockTag::ladder:
    case BlockTag::ladder_prime:
    case BlockTag::ladder_double_prime: {
      int k = kind.k;
      E e;
      for (int i = 0; i + 1 < k; ++i) {
        e.emplace_back(i, i + 1);          // rail a
        e.emplace_back(k + i, k + i + 1);  // rail b
      }
      for (int i = 0; i < k; ++i) e.emplace_back(i, k + i);  // rungs
      int n = 2 * k;
      if (kind.tag != BlockTag::ladder) {
        e.emplace_back(k - 1, n);  // apex over the last rung
        e.emplace_back(2 * k - 1, n);
        n += 1;
      }
      if (kind.tag == BlockTag::ladder_double_prime) {
        e.emplace_back(0, n);  // apex over the first rung
        e.emplace_back(k, n);
        n += 1;
      }
      return build_graph(n, e);
    }
  }
  throw internal_error("unknown block tag");
}

// Attachment slots: template vertices of degree < 3, one entry per missing
// half-edge (so the plain vertex lists its single vertex three times). Order
// is canonical and is the indexing used by block decompositions.
inline std::vector<int> family_slots(const BlockKind& kind) {
  detail::require_ladder_k(kind);
  switch (kind.tag) {
    case BlockTag::k3: return {0, 1, 2};
    case BlockTag::k4: return {};
    case BlockTag::diamond: return {0, 1};
    case BlockTag::diamond_prime: return {4};
    case BlockTag::prism: return {};
    case BlockTag::k23: return {2, 3, 4};
    case BlockTag::k33: return {};
    case BlockTag::k33_minus: return {0, 3};
    case BlockTag::plain_vertex: return {0, 0, 0};
    case BlockTag::ladder: return {0, kind.k - 1, kind.k, 2 * kind.k - 1};
    case BlockTag::ladder_prime: return {0, kind.k, 2 * kind.k};
    case BlockTag::ladder_double_prime: return {2 * kind.k, 2 * kind.k + 1};
  }
  throw internal_error("unknown block tag");
}

}  // namespace cind
