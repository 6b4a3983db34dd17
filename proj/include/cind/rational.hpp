#pragma once

// Exact rational arithmetic for lower bound formulas. All bound
// comparisons in tests and experiments go through Rat so no tolerance
// fudging is ever needed.

#include <boost/rational.hpp>
#include <string>

#include "cind/graph.hpp"

namespace cind {

using Rat = boost::rational<long long>;

inline std::string rat_to_string(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

// Lower bound on the maximum order of an induced 2-regular subgraph of a
// connected cubic graph whose induced cycles all have length <= k:
// (n - 2) / (4 - 4/k), i.e. k (n - 2) / (4 k - 4).
inline Rat kchordal_bound(long long n, long long k) {
  if (k < 3) throw precondition_error("chordality parameter must be >= 3");
  if (n < 2) throw precondition_error("order must be >= 2");
  return Rat(k * (n - 2), 4 * k - 4);
}

// Lower bound for connected cubic graphs in general position: with
// independence number at most (3/8 - eps) n, the maximum order exceeds
// (1/4 + eps) n - 1. Returns that threshold.
inline Rat low_independence_bound(long long n, const Rat& eps) {
  if (eps <= Rat(0) || eps >= Rat(3, 8))
    throw precondition_error("eps must lie strictly between 0 and 3/8");
  return (Rat(1, 4) + eps) * Rat(n) - Rat(1);
}

// Baseline bound for connected graphs with maximum degree r >= 3 that
// contain a cycle: n / (2 (r - 1)) + 1 / ((r - 1) (r - 2)).
inline Rat regular_baseline_bound(long long n, long long r) {
  if (r < 3) throw precondition_error("degree parameter must be >= 3");
  return Rat(n, 2 * (r - 1)) + Rat(1, (r - 1) * (r - 2));
}

// Lower bound for connected cubic 4-chordal graphs other than the three
// exceptional ones: 5n/8 + 3/4. Integral orders meeting it satisfy
// order >= ceil((5n + 6) / 8).
inline Rat five_eighths_bound(long long n) { return Rat(5 * n + 6, 8); }

inline long long ceil_rat(const Rat& r) {
  long long q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

}  // namespace cind
