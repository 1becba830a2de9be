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

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "spclat/error.hpp"
#include "spclat/poset.hpp"

namespace spclat {

// Finite upper semilattice with bottom: every pair has a least upper
// bound, and a least element exists. Built from a poset by locating
// those bounds; NoJoin / NoBottom report the failure witness.
class UpperSemilattice {
 public:
  UpperSemilattice() = default;

  static UpperSemilattice from_poset(FinPoset p) {
    UpperSemilattice s;
    const std::size_t n = p.size();
    if (!p.bottom().has_value())
      throw NoBottom("poset has no least element");
    s.bottom_ = *p.bottom();
    s.join_.assign(n, std::vector<std::size_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Bitset ub = p.upset_of(i) & p.upset_of(j);
        // The least upper bound is the unique member of ub below all
        // others, i.e. the one whose upset contains all of ub.
        std::size_t lub = n;
        ub.for_each([&](std::size_t k) {
          if (ub.subset_of(p.upset_of(k))) lub = k;
        });
        if (lub == n)
          throw NoJoin("no least upper bound for " + p.label(i) + " and " + p.label(j));
        s.join_[i][j] = s.join_[j][i] = lub;
      }
    s.poset_ = std::move(p);
    return s;
  }

  std::size_t size() const { return poset_.size(); }
  const FinPoset& poset() const { return poset_; }
  const std::vector<std::string>& labels() const { return poset_.labels(); }
  const std::string& label(std::size_t i) const { return poset_.label(i); }
  int index_of(const std::string& l) const { return poset_.index_of(l); }

  std::size_t bottom() const { return bottom_; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i][j]; }
  bool leq(std::size_t i, std::size_t j) const { return poset_.leq(i, j); }

 private:
  FinPoset poset_;
  std::vector<std::vector<std::size_t>> join_;
  std::size_t bottom_ = 0;
};

// Join- and bottom-preserving map between upper semilattices.
struct SLatMorphism {
  const UpperSemilattice* source = nullptr;
  const UpperSemilattice* target = nullptr;
  std::vector<std::size_t> map;
};

inline SLatMorphism make_slat_morphism(const UpperSemilattice& s, const UpperSemilattice& t,
                                       std::vector<std::size_t> map) {
  if (map.size() != s.size()) throw InvalidInput("map size does not match source");
  for (std::size_t v : map)
    if (v >= t.size()) throw InvalidInput("map value out of range");
  if (map[s.bottom()] != t.bottom())
    throw InvalidInput("map does not preserve the least element");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i; j < s.size(); ++j)
      if (map[s.join(i, j)] != t.join(map[i], map[j]))
        throw InvalidInput("map does not preserve the join of " + s.label(i) + " and " +
                           s.label(j));
  return SLatMorphism{&s, &t, std::move(map)};
}

}  // namespace spclat
