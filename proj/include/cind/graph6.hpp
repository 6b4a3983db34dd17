#pragma once

// graph6 codec (the standard ASCII encoding of simple graphs: order header,
// then the upper triangle of the adjacency matrix in column-major order, six
// bits per printable byte) and a plain edgelist format whose first line is
// the order and whose remaining lines are "u v" pairs, 0-based.

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cind/graph.hpp"

namespace cind {

class graph6_error : public std::runtime_error {
 public:
  graph6_error(std::size_t offset, const std::string& what)
      : std::runtime_error("graph6: byte " + std::to_string(offset) + ": " + what),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

inline std::string to_graph6(const Graph& g) {
  int n = g.n();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, nbits = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph from_graph6(const std::string& text) {
  std::size_t pos = 0;
  const std::string header = ">>graph6<<";
  if (text.rfind(header, 0) == 0) pos = header.size();
  std::size_t end = text.size();
  while (end > pos && (text[end - 1] == '\n' || text[end - 1] == '\r' ||
                       text[end - 1] == ' ' || text[end - 1] == '\t'))
    --end;
  auto need = [&](std::size_t i) {
    if (i >= end) throw graph6_error(end, "unexpected end of data");
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < 63 || c > 126) throw graph6_error(i, "byte out of printable range");
    return static_cast<int>(c) - 63;
  };
  if (pos >= end) throw graph6_error(pos, "empty input");
  long long n;
  int first = need(pos);
  if (first < 63) {
    n = first;
    ++pos;
  } else {
    if (pos + 1 < end && static_cast<unsigned char>(text[pos + 1]) == 126)
      throw graph6_error(pos, "orders needing the 8-byte header are not supported");
    n = (static_cast<long long>(need(pos + 1)) << 12) |
        (static_cast<long long>(need(pos + 2)) << 6) | need(pos + 3);
    pos += 4;
  }
  if (n > 100000) throw graph6_error(pos, "order too large");
  long long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (end - pos < nbytes) throw graph6_error(end, "truncated adjacency data");
  if (end - pos > nbytes) throw graph6_error(pos + nbytes, "trailing data");
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      int byte = need(pos + static_cast<std::size_t>(bit / 6));
      if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  // padding bits must be zero
  for (long long b = nbits; b < static_cast<long long>(nbytes) * 6; ++b) {
    int byte = need(pos + static_cast<std::size_t>(b / 6));
    if ((byte >> (5 - b % 6)) & 1)
      throw graph6_error(pos + static_cast<std::size_t>(b / 6), "nonzero padding bit");
  }
  return build_graph(static_cast<int>(n), edges);
}

inline std::string to_edgelist(const Graph& g) {
  std::ostringstream out;
  out << g.n() << "\n";
  for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
  return out.str();
}

inline Graph from_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    if (n < 0) {
      if (!(ls >> n) || n < 0)
        throw precondition_error("edgelist line " + std::to_string(lineno) +
                                 ": expected vertex count");
      std::string rest;
      if (ls >> rest)
        throw precondition_error("edgelist line " + std::to_string(lineno) +
                                 ": unexpected token after vertex count");
      continue;
    }
    long long u, v;
    if (!(ls >> u)) continue;  // blank line
    if (!(ls >> v))
      throw precondition_error("edgelist line " + std::to_string(lineno) +
                               ": expected two endpoints");
    std::string rest;
    if (ls >> rest)
      throw precondition_error("edgelist line " + std::to_string(lineno) +
                               ": unexpected token after edge");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw precondition_error("edgelist: missing vertex count line");
  return build_graph(static_cast<int>(n), edges);
}

}  // namespace cind
