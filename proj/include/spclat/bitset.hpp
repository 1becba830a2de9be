//  Copyright 2026 The spclat authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "spclat/error.hpp"

namespace spclat {

// Fixed-width dynamic bit vector. Used for subsets of a ground set:
// rows of order relations, downsets, open sets. Width is part of the
// value; operations on mismatched widths are logic errors.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  static Bitset full(std::size_t nbits) {
    Bitset b(nbits);
    for (auto& w : b.words_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }

  std::size_t size() const { return nbits_; }

  bool test(std::size_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  bool subset_of(const Bitset& o) const {
    check_width(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~o.words_[k]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    check_width(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

  Bitset operator|(const Bitset& o) const {
    check_width(o);
    Bitset r(nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] | o.words_[k];
    return r;
  }
  Bitset operator&(const Bitset& o) const {
    check_width(o);
    Bitset r(nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & o.words_[k];
    return r;
  }
  Bitset& operator|=(const Bitset& o) {
    check_width(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    check_width(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  Bitset complement() const {
    Bitset r(nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k) r.words_[k] = ~words_[k];
    r.trim();
    return r;
  }
  // Set difference: bits of *this not in o.
  Bitset minus(const Bitset& o) const {
    check_width(o);
    Bitset r(nbits_);
    for (std::size_t k = 0; k < words_.size(); ++k)
      r.words_[k] = words_[k] & ~o.words_[k];
    return r;
  }

  // Copies src into *this at the given bit offset. Widths must fit.
  void or_shifted(const Bitset& src, std::size_t offset) {
    for (std::size_t i = 0; i < src.nbits_; ++i)
      if (src.test(i)) set(offset + i);
  }

  bool operator==(const Bitset& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }
  bool operator!=(const Bitset& o) const { return !(*this == o); }

  // Deterministic total order: cardinality first, then word-lexicographic.
  static bool canonical_less(const Bitset& a, const Bitset& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t k = a.words_.size(); k-- > 0;)
      if (a.words_[k] != b.words_[k]) return a.words_[k] < b.words_[k];
    return false;
  }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ nbits_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xbf58476d1ce4e5b9ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  std::vector<std::size_t> bits() const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        unsigned tz = std::countr_zero(w);
        out.push_back(k * 64 + tz);
        w &= w - 1;
      }
    }
    return out;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        unsigned tz = std::countr_zero(w);
        f(k * 64 + tz);
        w &= w - 1;
      }
    }
  }

 private:
  void check_width(const Bitset& o) const {
    if (nbits_ != o.nbits_)
      throw Error("bitset width mismatch");
  }
  void trim() {
    unsigned rem = nbits_ & 63;
    if (rem && !words_.empty())
      words_.back() &= (std::uint64_t{1} << rem) - 1;
  }

  std::size_t nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

}  // namespace spclat
