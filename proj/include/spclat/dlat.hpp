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

#include <algorithm>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "spclat/bitset.hpp"
#include "spclat/error.hpp"
#include "spclat/poset.hpp"
#include "spclat/semilattice.hpp"

namespace spclat {

inline constexpr std::size_t kDefaultLatticeCap = std::size_t{1} << 16;
inline constexpr std::size_t kDefaultInputGuard = 512;
inline constexpr std::size_t kDefaultTableGuard = 8192;

// Finite bounded distributive lattice, held in its canonical set
// representation: a ground poset (order-isomorphic to the poset of
// join-irreducible elements) together with the family of all of its
// downsets. Joins are unions, meets are intersections, and the order
// is inclusion, so the lattice axioms and distributivity hold by
// construction; user-supplied order data is checked exhaustively and
// re-encoded into this form.
class DistLattice {
 public:
  DistLattice() : DistLattice(trivial()) {}

  // Lattice of all downsets of `ground`, ordered by inclusion.
  static DistLattice downsets_of(FinPoset ground, std::size_t cap = kDefaultLatticeCap) {
    const std::size_t n = ground.size();
    std::vector<Bitset> all;
    std::unordered_set<Bitset, BitsetHash> seen;
    all.emplace_back(n);
    seen.insert(all.back());
    for (std::size_t head = 0; head < all.size(); ++head) {
      Bitset cur = all[head];
      for (std::size_t x = 0; x < n; ++x) {
        if (cur.test(x)) continue;
        Bitset next = cur | ground.downset_of(x);
        if (seen.insert(next).second) {
          if (all.size() + 1 > cap)
            throw CapacityExceeded("downset lattice would exceed " + std::to_string(cap) +
                                   " elements");
          all.push_back(std::move(next));
        }
      }
    }
    std::vector<std::string> labels;
    labels.reserve(all.size());
    std::sort(all.begin(), all.end(), Bitset::canonical_less);
    for (const Bitset& m : all) {
      std::vector<std::string> members;
      m.for_each([&](std::size_t i) { members.push_back(ground.label(i)); });
      labels.push_back(detail::set_label(std::move(members)));
    }
    return DistLattice(std::move(ground), std::move(all), std::move(labels));
  }

  // Builds a lattice from explicit order data: the order generated by
  // `pairs` must be a distributive lattice. All pairwise bounds and the
  // distributive law are checked element by element before the input is
  // re-encoded canonically; element labels are preserved.
  static DistLattice from_relation(const std::vector<std::string>& labels,
                                   const std::vector<std::pair<std::string, std::string>>& pairs,
                                   std::size_t guard = kDefaultInputGuard) {
    FinPoset p = FinPoset::validate(labels, pairs);
    const std::size_t n = p.size();
    if (n == 0) throw InvalidInput("a lattice must have at least one element");
    if (n > guard)
      throw SizeGuard("explicit lattice input has " + std::to_string(n) +
                      " elements; guard is " + std::to_string(guard));

    std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n, n));
    std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n, n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        Bitset ub = p.upset_of(i) & p.upset_of(j);
        ub.for_each([&](std::size_t k) {
          if (ub.subset_of(p.upset_of(k))) join[i][j] = join[j][i] = k;
        });
        if (join[i][j] == n)
          throw NoJoin("no least upper bound for " + p.label(i) + " and " + p.label(j));
        Bitset lb = p.downset_of(i) & p.downset_of(j);
        lb.for_each([&](std::size_t k) {
          if (lb.subset_of(p.downset_of(k))) meet[i][j] = meet[j][i] = k;
        });
        if (meet[i][j] == n)
          throw InvalidInput("no greatest lower bound for " + p.label(i) + " and " + p.label(j));
      }
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = b; c < n; ++c)
          if (meet[a][join[b][c]] != join[meet[a][b]][meet[a][c]])
            throw InvalidInput("lattice is not distributive at (" + p.label(a) + "," +
                               p.label(b) + "," + p.label(c) + ")");

    std::size_t bottom = 0;
    for (std::size_t i = 0; i < n; ++i) bottom = meet[bottom][i];
    // x is join-irreducible exactly when the join of everything
    // strictly below it stays strictly below it.
    std::vector<std::size_t> ji;
    std::vector<int> ji_slot(n, -1);
    for (std::size_t x = 0; x < n; ++x) {
      std::size_t acc = bottom;
      p.downset_of(x).for_each([&](std::size_t y) {
        if (y != x) acc = join[acc][y];
      });
      if (x != bottom && acc != x) {
        ji_slot[x] = static_cast<int>(ji.size());
        ji.push_back(x);
      }
    }
    const std::size_t k = ji.size();
    std::vector<std::string> ground_labels;
    std::vector<Bitset> ground_rows(k, Bitset(k));
    for (std::size_t a = 0; a < k; ++a) {
      ground_labels.push_back(p.label(ji[a]));
      for (std::size_t b = 0; b < k; ++b)
        if (p.leq(ji[a], ji[b])) ground_rows[a].set(b);
    }
    FinPoset ground = FinPoset::from_rows(std::move(ground_labels), std::move(ground_rows));

    std::vector<Bitset> masks;
    std::unordered_set<Bitset, BitsetHash> distinct;
    std::vector<std::string> elem_labels;
    std::vector<std::pair<Bitset, std::string>> rep;
    for (std::size_t x = 0; x < n; ++x) {
      Bitset m(k);
      for (std::size_t a = 0; a < k; ++a)
        if (p.leq(ji[a], x)) m.set(a);
      if (!distinct.insert(m).second)
        throw InvalidInput("order data does not describe a lattice: " + p.label(x) +
                           " is not determined by the irreducibles below it");
      rep.emplace_back(std::move(m), p.label(x));
    }
    std::sort(rep.begin(), rep.end(),
              [](const auto& a, const auto& b) { return Bitset::canonical_less(a.first, b.first); });
    for (auto& [m, l] : rep) {
      masks.push_back(std::move(m));
      elem_labels.push_back(std::move(l));
    }
    DistLattice out(std::move(ground), std::move(masks), std::move(elem_labels));
    if (out.size() != n)
      throw InvalidInput("order data is not a complete distributive lattice");
    return out;
  }

  // One-element lattice (bottom = top).
  static DistLattice trivial() { return downsets_of(FinPoset::antichain({})); }

  std::size_t size() const { return masks_.size(); }
  const FinPoset& ground() const { return ground_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  int index_of(const std::string& l) const {
    auto it = label_index_.find(l);
    return it == label_index_.end() ? -1 : static_cast<int>(it->second);
  }
  const Bitset& mask(std::size_t i) const { return masks_[i]; }
  int index_of_mask(const Bitset& m) const {
    auto it = mask_index_.find(m);
    return it == mask_index_.end() ? -1 : static_cast<int>(it->second);
  }
  std::size_t element_of_mask(const Bitset& m) const {
    int i = index_of_mask(m);
    if (i < 0) throw Error("set is not an element of the lattice");
    return static_cast<std::size_t>(i);
  }

  bool leq(std::size_t i, std::size_t j) const { return masks_[i].subset_of(masks_[j]); }
  std::size_t join(std::size_t i, std::size_t j) const {
    return mask_index_.at(masks_[i] | masks_[j]);
  }
  std::size_t meet(std::size_t i, std::size_t j) const {
    return mask_index_.at(masks_[i] & masks_[j]);
  }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  // Element index of the join-irreducible sitting over ground element g.
  std::size_t ji_element(std::size_t g) const { return ji_of_ground_[g]; }
  bool is_ji(std::size_t i) const { return is_ji_[i] != 0; }
  std::vector<std::size_t> ji_elements() const { return ji_of_ground_; }

  // The whole lattice as a poset under inclusion (quadratic; guarded).
  FinPoset element_poset(std::size_t guard = kDefaultTableGuard) const {
    const std::size_t n = size();
    if (n > guard)
      throw SizeGuard("element poset of a " + std::to_string(n) + "-element lattice exceeds guard " +
                      std::to_string(guard));
    std::vector<Bitset> rows(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (masks_[i].subset_of(masks_[j])) rows[i].set(j);
    return FinPoset::from_rows(labels_, std::move(rows));
  }

  UpperSemilattice as_semilattice(std::size_t guard = kDefaultTableGuard) const {
    return UpperSemilattice::from_poset(element_poset(guard));
  }

  // Boolean exactly when no two distinct irreducibles are comparable.
  bool boolean() const {
    for (std::size_t g = 0; g < ground_.size(); ++g)
      if (ground_.upset_of(g).count() != 1) return false;
    return true;
  }

  bool operator==(const DistLattice& o) const {
    return ground_ == o.ground_ && masks_ == o.masks_ && labels_ == o.labels_;
  }

 private:
  DistLattice(FinPoset ground, std::vector<Bitset> masks, std::vector<std::string> labels)
      : ground_(std::move(ground)), masks_(std::move(masks)), labels_(std::move(labels)) {
    for (std::size_t i = 0; i < masks_.size(); ++i) {
      mask_index_.emplace(masks_[i], i);
      if (!label_index_.emplace(labels_[i], i).second)
        throw InvalidInput("duplicate lattice element label: " + labels_[i]);
    }
    bottom_ = mask_index_.at(Bitset(ground_.size()));
    top_ = mask_index_.at(Bitset::full(ground_.size()));
    ji_of_ground_.assign(ground_.size(), 0);
    is_ji_.assign(masks_.size(), 0);
    for (std::size_t g = 0; g < ground_.size(); ++g) {
      ji_of_ground_[g] = mask_index_.at(ground_.downset_of(g));
      is_ji_[ji_of_ground_[g]] = 1;
    }
  }

  friend DistLattice opposite(const DistLattice&);

  FinPoset ground_;
  std::vector<Bitset> masks_;
  std::vector<std::string> labels_;
  std::unordered_map<Bitset, std::size_t, BitsetHash> mask_index_;
  std::unordered_map<std::string, std::size_t> label_index_;
  std::vector<std::size_t> ji_of_ground_;
  std::vector<char> is_ji_;
  std::size_t bottom_ = 0, top_ = 0;
};

// Lattice of all downward-closed subsets of a poset, ordered by
// inclusion.
inline DistLattice from_downsets(FinPoset p, std::size_t cap = kDefaultLatticeCap) {
  return DistLattice::downsets_of(std::move(p), cap);
}

// Poset of join-irreducible elements (elements that are not the join
// of anything strictly below them, the bottom excluded), carrying the
// induced order and the lattice element labels.
inline FinPoset join_irreducibles(const DistLattice& l) {
  const FinPoset& g = l.ground();
  std::vector<std::string> labels;
  std::vector<Bitset> rows;
  labels.reserve(g.size());
  rows.reserve(g.size());
  for (std::size_t a = 0; a < g.size(); ++a) {
    labels.push_back(l.label(l.ji_element(a)));
    rows.push_back(g.upset_of(a));
  }
  return FinPoset::from_rows(std::move(labels), std::move(rows));
}

// Order-reversed lattice: same elements and labels, joins and meets
// exchanged. Downsets for the reversed ground are the complements of
// the original downsets.
inline DistLattice opposite(const DistLattice& l) {
  std::vector<std::pair<Bitset, std::string>> rep;
  rep.reserve(l.size());
  for (std::size_t i = 0; i < l.size(); ++i)
    rep.emplace_back(l.mask(i).complement(), l.label(i));
  std::sort(rep.begin(), rep.end(),
            [](const auto& a, const auto& b) { return Bitset::canonical_less(a.first, b.first); });
  std::vector<Bitset> masks;
  std::vector<std::string> labels;
  for (auto& [m, s] : rep) {
    masks.push_back(std::move(m));
    labels.push_back(std::move(s));
  }
  return DistLattice(l.ground().reversed(), std::move(masks), std::move(labels));
}

// Lattice of open sets of the Alexandroff topology of a poset: all
// up-closed subsets, ordered by inclusion.
inline DistLattice alexandroff_opens(const FinPoset& p, std::size_t cap = kDefaultLatticeCap) {
  return DistLattice::downsets_of(p.reversed(), cap);
}

// --- Morphisms ------------------------------------------------------

// Map preserving bottom, top, joins and meets; checked exhaustively.
struct DLatMorphism {
  const DistLattice* source = nullptr;
  const DistLattice* target = nullptr;
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t i) const { return map[i]; }
};

inline DLatMorphism make_dlat_morphism(const DistLattice& s, const DistLattice& t,
                                       std::vector<std::size_t> map) {
  if (map.size() != s.size()) throw InvalidInput("map size does not match source lattice");
  for (std::size_t v : map)
    if (v >= t.size()) throw InvalidInput("map value out of range");
  if (map[s.bottom()] != t.bottom()) throw InvalidInput("map does not preserve bottom");
  if (map[s.top()] != t.top()) throw InvalidInput("map does not preserve top");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (map[s.join(i, j)] != t.join(map[i], map[j]))
        throw InvalidInput("map does not preserve the join of " + s.label(i) + " and " +
                           s.label(j));
      if (map[s.meet(i, j)] != t.meet(map[i], map[j]))
        throw InvalidInput("map does not preserve the meet of " + s.label(i) + " and " +
                           s.label(j));
    }
  return DLatMorphism{&s, &t, std::move(map)};
}

inline DLatMorphism compose(const DLatMorphism& f, const DLatMorphism& g) {
  if (f.target != g.source) throw InvalidInput("morphisms do not compose");
  std::vector<std::size_t> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i]];
  return DLatMorphism{f.source, g.target, std::move(map)};
}

// --- Constructions --------------------------------------------------

// Free distributive lattice over an upper semilattice, together with
// the unit map (join- and bottom-preserving, injective, order
// reflecting). Elements are the downsets of the semilattice order.
struct FreeResult {
  DistLattice lattice;
  std::vector<std::size_t> unit;  // semilattice element -> lattice element
};

inline FreeResult free_dlat(const UpperSemilattice& u, std::size_t cap = kDefaultLatticeCap) {
  DistLattice l = DistLattice::downsets_of(u.poset(), cap);
  std::vector<std::size_t> unit(u.size());
  for (std::size_t x = 0; x < u.size(); ++x)
    unit[x] = l.element_of_mask(u.poset().upset_of(x).complement());
  return FreeResult{std::move(l), std::move(unit)};
}

// Boolean envelope: all subsets of the set of irreducibles, with the
// canonical lattice map into it.
struct BooleanizeResult {
  DistLattice lattice;
  std::vector<std::size_t> unit;  // lattice element -> envelope element
};

inline BooleanizeResult booleanize(const DistLattice& l, std::size_t cap = kDefaultLatticeCap) {
  DistLattice b = DistLattice::downsets_of(FinPoset::antichain(l.ground().labels()), cap);
  std::vector<std::size_t> unit(l.size());
  for (std::size_t x = 0; x < l.size(); ++x) unit[x] = b.element_of_mask(l.mask(x));
  return BooleanizeResult{std::move(b), std::move(unit)};
}

// Coproduct of two lattices, with its canonical injections. The ground
// poset is the product of the two ground posets; the injections pair an
// element with the top of the other factor.
struct TensorResult {
  DistLattice lattice;
  std::vector<std::size_t> inj_left;
  std::vector<std::size_t> inj_right;
};

inline TensorResult tensor(const DistLattice& l, const DistLattice& m,
                           std::size_t cap = kDefaultLatticeCap) {
  const std::size_t nl = l.ground().size(), nm = m.ground().size();
  DistLattice t = DistLattice::downsets_of(product(l.ground(), m.ground()), cap);
  std::vector<std::size_t> inj_left(l.size()), inj_right(m.size());
  const Bitset full_m = Bitset::full(nm);
  for (std::size_t a = 0; a < l.size(); ++a) {
    Bitset mk(nl * nm);
    l.mask(a).for_each([&](std::size_t p) { mk.or_shifted(full_m, p * nm); });
    inj_left[a] = t.element_of_mask(mk);
  }
  for (std::size_t b = 0; b < m.size(); ++b) {
    Bitset mk(nl * nm);
    for (std::size_t p = 0; p < nl; ++p) mk.or_shifted(m.mask(b), p * nm);
    inj_right[b] = t.element_of_mask(mk);
  }
  return TensorResult{std::move(t), std::move(inj_left), std::move(inj_right)};
}

// Finite power L^S with named copies; componentwise order. Block s of
// the ground holds copy s of the ground of L.
struct PowerResult {
  DistLattice lattice;
  std::vector<std::string> names;  // copy names, in block order
  std::size_t base_ji = 0;         // ground size of one copy

  std::size_t from_components(const DistLattice& base,
                              const std::vector<std::size_t>& comps) const {
    if (comps.size() != names.size()) throw InvalidInput("component count does not match power");
    for (std::size_t v : comps)
      if (v >= base.size()) throw InvalidInput("component value out of range");
    Bitset mk(names.size() * base_ji);
    for (std::size_t s = 0; s < comps.size(); ++s)
      mk.or_shifted(base.mask(comps[s]), s * base_ji);
    return lattice.element_of_mask(mk);
  }

  std::size_t component(const DistLattice& base, std::size_t elem, std::size_t s) const {
    Bitset mk(base_ji);
    lattice.mask(elem).for_each([&](std::size_t bit) {
      if (bit / base_ji == s) mk.set(bit % base_ji);
    });
    return base.element_of_mask(mk);
  }
};

inline PowerResult power(const DistLattice& l, const std::vector<std::string>& names,
                         std::size_t cap = kDefaultLatticeCap) {
  FinPoset ground = product(FinPoset::antichain(names), l.ground());
  PowerResult out;
  out.lattice = DistLattice::downsets_of(std::move(ground), cap);
  out.names = names;
  out.base_ji = l.ground().size();
  return out;
}

}  // namespace spclat
