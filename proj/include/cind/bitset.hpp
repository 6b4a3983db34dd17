#pragma once

// Fixed-width dynamic bitset over 64-bit words. Vertex sets throughout the
// library are Bitsets; a graph on n <= 64 vertices uses a single word per row.

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace cind {

class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int nbits) : nbits_(nbits), w_((nbits + 63) / 64, 0) {}

  static Bitset of(int nbits, std::initializer_list<int> bits) {
    Bitset b(nbits);
    for (int i : bits) b.set(i);
    return b;
  }

  static Bitset from_vector(int nbits, const std::vector<int>& bits) {
    Bitset b(nbits);
    for (int i : bits) b.set(i);
    return b;
  }

  static Bitset full(int nbits) {
    Bitset b(nbits);
    for (auto& w : b.w_) w = ~0ULL;
    b.trim();
    return b;
  }

  int size_bits() const { return nbits_; }

  bool test(int i) const {
    assert(i >= 0 && i < nbits_);
    return (w_[i >> 6] >> (i & 63)) & 1ULL;
  }

  void set(int i) {
    assert(i >= 0 && i < nbits_);
    w_[i >> 6] |= 1ULL << (i & 63);
  }

  void reset(int i) {
    assert(i >= 0 && i < nbits_);
    w_[i >> 6] &= ~(1ULL << (i & 63));
  }

  void clear() {
    for (auto& w : w_) w = 0;
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  bool none() const { return !any(); }

  bool intersects(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  int intersection_count(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    int c = 0;
    for (size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  Bitset operator&(const Bitset& o) const {
    Bitset r(nbits_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  Bitset operator|(const Bitset& o) const {
    Bitset r(nbits_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  Bitset and_not(const Bitset& o) const {
    Bitset r(nbits_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }

  Bitset complemented() const {
    Bitset r(nbits_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = ~w_[i];
    r.trim();
    return r;
  }

  void operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }

  void operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  }

  bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && w_ == o.w_; }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // Order matching lexicographic comparison of the sorted element sequences:
  // at the lowest differing bit, the set containing it comes first.
  bool lex_less(const Bitset& o) const {
    assert(nbits_ == o.nbits_);
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t d = w_[i] ^ o.w_[i];
      if (d) {
        uint64_t low = d & (~d + 1);
        return (w_[i] & low) != 0;
      }
    }
    return false;
  }

  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  template <typename F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        f(int(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first_item = true;
    for_each([&](int i) {
      if (!first_item) s += ",";
      s += std::to_string(i);
      first_item = false;
    });
    s += "}";
    return s;
  }

 private:
  void trim() {
    int tail = nbits_ & 63;
    if (tail && !w_.empty()) w_.back() &= (1ULL << tail) - 1;
  }

  int nbits_ = 0;
  std::vector<uint64_t> w_;
};

}  // namespace cind
