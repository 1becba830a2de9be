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

// Deterministic corpora of small order-theoretic structures: all finite
// posets up to isomorphism below a size bound, the distributive lattices
// they generate, the upper semilattices among them, and seeded random
// posets for property campaigns.  Enumeration order is deterministic:
// classes are discovered by size, then by the order their parents were
// discovered, then by the canonical order of the added downset.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spclat/bitset.hpp"
#include "spclat/dlat.hpp"
#include "spclat/error.hpp"
#include "spclat/poset.hpp"
#include "spclat/semilattice.hpp"

namespace spclat {

namespace detail {

/// Isomorphism-invariant fingerprint of a poset: the sorted multiset of
/// refined node signatures.  Equal posets share keys; unequal keys prove
/// non-isomorphism, so pairwise checks only run within a bucket.
inline std::uint64_t poset_class_key(const FinPoset& p) {
  auto sig = refine_signatures(p);
  std::sort(sig.begin(), sig.end());
  std::uint64_t h = 1469598103934665603ull ^
                    (static_cast<std::uint64_t>(p.size()) * 1099511628211ull);
  for (std::uint64_t v : sig) h = (h ^ v) * 1099511628211ull;
  return h;
}

}  // namespace detail

/// Accumulates pairwise non-isomorphic posets.  add() keeps the argument
/// only if no stored class is isomorphic to it.
class PosetClassCollector {
 public:
  bool add(FinPoset p) {
    const std::uint64_t key = detail::poset_class_key(p);
    auto& bucket = buckets_[key];
    for (std::size_t idx : bucket)
      if (poset_isomorphism(classes_[idx], p)) return false;
    bucket.push_back(classes_.size());
    classes_.push_back(std::move(p));
    return true;
  }

  const std::vector<FinPoset>& classes() const { return classes_; }
  std::vector<FinPoset> take() { return std::move(classes_); }

 private:
  std::vector<FinPoset> classes_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets_;
};

namespace detail {

/// Extends `p` by one new maximal element whose strict downset is exactly
/// the downset `d` of `p`.  Every poset on n+1 points arises this way from
/// its restriction along a linear extension, so iterating this step from
/// the empty poset is exhaustive.
inline FinPoset poset_with_new_top(const FinPoset& p, const Bitset& d) {
  const std::size_t n = p.size();
  std::vector<std::string> labels;
  labels.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
  labels.push_back("p" + std::to_string(n));
  std::vector<Bitset> rows;
  rows.reserve(n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    Bitset row(n + 1);
    p.upset_of(i).for_each([&](std::size_t j) { row.set(j); });
    if (d.test(i)) row.set(n);
    rows.push_back(std::move(row));
  }
  Bitset top_row(n + 1);
  top_row.set(n);
  rows.push_back(std::move(top_row));
  return FinPoset::from_rows(std::move(labels), std::move(rows));
}

/// Number of downsets of `p`, or max_downsets + 1 if it exceeds the cap.
inline std::size_t downset_count_capped(const FinPoset& p,
                                        std::size_t max_downsets) {
  try {
    return DistLattice::downsets_of(p, max_downsets).size();
  } catch (const CapacityExceeded&) {
    return max_downsets + 1;
  }
}

}  // namespace detail

/// All posets with at most max_size elements, one per isomorphism class,
/// in deterministic order (by size, then discovery order).  Includes the
/// empty poset.
inline std::vector<FinPoset> all_posets(std::size_t max_size) {
  std::vector<FinPoset> out;
  std::vector<FinPoset> level;
  level.push_back(FinPoset::antichain({}));
  out.push_back(level.front());
  for (std::size_t n = 1; n <= max_size; ++n) {
    PosetClassCollector next;
    for (const FinPoset& p : level) {
      const DistLattice downs = DistLattice::downsets_of(p);
      for (std::size_t d = 0; d < downs.size(); ++d)
        next.add(detail::poset_with_new_top(p, downs.mask(d)));
    }
    level = next.take();
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// All posets (one per isomorphism class) whose downset lattice has at most
/// max_downsets elements.  Adding elements never shrinks the downset count,
/// so levels are pruned as soon as they exceed the cap; the search
/// terminates on its own once a level is empty.
inline std::vector<FinPoset> posets_with_few_downsets(std::size_t max_downsets) {
  std::vector<FinPoset> out;
  std::vector<FinPoset> level;
  level.push_back(FinPoset::antichain({}));
  if (detail::downset_count_capped(level.front(), max_downsets) <= max_downsets)
    out.push_back(level.front());
  else
    return {};
  while (!level.empty()) {
    PosetClassCollector next;
    for (const FinPoset& p : level) {
      const DistLattice downs = DistLattice::downsets_of(p);
      for (std::size_t d = 0; d < downs.size(); ++d) {
        FinPoset child = detail::poset_with_new_top(p, downs.mask(d));
        if (detail::downset_count_capped(child, max_downsets) <= max_downsets)
          next.add(std::move(child));
      }
    }
    level = next.take();
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// All distributive lattices with at most max_size elements, one per
/// isomorphism class (Birkhoff: these correspond exactly to the posets
/// whose downset count is within the bound).
inline std::vector<DistLattice> all_dist_lattices(std::size_t max_size) {
  std::vector<DistLattice> out;
  for (const FinPoset& p : posets_with_few_downsets(max_size))
    out.push_back(DistLattice::downsets_of(p));
  return out;
}

/// All upper semilattices with at most max_size elements, one per
/// isomorphism class: the posets in which a bottom exists and every pair
/// has a least upper bound.
inline std::vector<UpperSemilattice> all_semilattices(std::size_t max_size) {
  std::vector<UpperSemilattice> out;
  for (const FinPoset& p : all_posets(max_size)) {
    if (p.size() == 0) continue;
    try {
      out.push_back(UpperSemilattice::from_poset(p));
    } catch (const NoBottom&) {
    } catch (const NoJoin&) {
    }
  }
  return out;
}

/// Seeded random poset on n points: each pair i < j is related with the
/// given density, then the relation is transitively closed.  Only forward
/// edges are drawn, so the result is always acyclic; identical seeds yield
/// identical posets.
inline FinPoset random_poset(std::mt19937_64& rng, std::size_t n,
                             double density = 0.4) {
  std::bernoulli_distribution edge(density);
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Bitset row(n);
    row.set(i);
    rows.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (edge(rng)) rows[i].set(j);
  // Transitive closure (forward edges only, so one upward sweep suffices
  // per pass; iterate to a fixed point for clarity).
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      Bitset acc = rows[i];
      rows[i].for_each([&](std::size_t j) { acc |= rows[j]; });
      if (acc != rows[i]) {
        rows[i] = acc;
        changed = true;
      }
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back("r" + std::to_string(i));
  return FinPoset::from_rows(std::move(labels), std::move(rows));
}

}  // namespace spclat
