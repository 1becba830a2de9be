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
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "spclat/bitset.hpp"
#include "spclat/error.hpp"

namespace spclat {

namespace detail {

inline std::string tuple_label(const std::string& a, const std::string& b) {
  return "(" + a + "," + b + ")";
}

// Canonical label of a finite set of labels: members sorted
// lexicographically, comma separated, brace delimited.
inline std::string set_label(std::vector<std::string> members) {
  std::sort(members.begin(), members.end());
  std::string out = "{";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) out += ",";
    out += members[i];
  }
  out += "}";
  return out;
}

}  // namespace detail

// Finite partial order on a list of labelled elements. The full relation
// is stored as bit rows in both directions; construction always verifies
// reflexivity, antisymmetry and transitivity.
class FinPoset {
 public:
  FinPoset() = default;

  // Builds the poset generated by `pairs` (a <= b entries over `labels`):
  // the reflexive-transitive closure is taken, and a CycleDetected error
  // is raised if the closure identifies two distinct elements.
  static FinPoset validate(const std::vector<std::string>& labels,
                           const std::vector<std::pair<std::string, std::string>>& pairs) {
    FinPoset p;
    p.init_labels(labels);
    const std::size_t n = labels.size();
    p.up_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
    for (const auto& [a, b] : pairs) {
      int i = p.index_of(a), j = p.index_of(b);
      if (i < 0 || j < 0)
        throw InvalidInput("leq pair mentions unknown label: (" + a + "," + b + ")");
      p.up_[static_cast<std::size_t>(i)].set(static_cast<std::size_t>(j));
    }
    // Transitive closure over bit rows.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p.up_[i].test(j) && p.up_[j].test(i))
          throw CycleDetected("order cycle through " + labels[i] + " and " + labels[j]);
    p.fill_down();
    return p;
  }

  // Builds from complete up-rows (row i = all j with i <= j) and checks
  // the order axioms.
  static FinPoset from_rows(std::vector<std::string> labels, std::vector<Bitset> up_rows) {
    FinPoset p;
    p.init_labels(labels);
    const std::size_t n = labels.size();
    if (up_rows.size() != n) throw InvalidInput("row count does not match element count");
    p.up_ = std::move(up_rows);
    for (std::size_t i = 0; i < n; ++i) {
      if (p.up_[i].size() != n) throw InvalidInput("row width does not match element count");
      if (!p.up_[i].test(i)) throw InvalidInput("relation not reflexive at " + p.labels_[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = p.up_[i].bits();
      for (std::size_t k : row) {
        if (k != i && p.up_[k].test(i))
          throw CycleDetected("order cycle through " + p.labels_[i] + " and " + p.labels_[k]);
        if (!p.up_[k].subset_of(p.up_[i]))
          throw InvalidInput("relation not transitive at " + p.labels_[i]);
      }
    }
    p.fill_down();
    return p;
  }

  static FinPoset chain(std::size_t n, const std::string& prefix = "c") {
    std::vector<std::string> labels;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    for (std::size_t i = 0; i + 1 < n; ++i) pairs.emplace_back(labels[i], labels[i + 1]);
    return validate(labels, pairs);
  }

  static FinPoset antichain(const std::vector<std::string>& labels) {
    return validate(labels, {});
  }

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  int index_of(const std::string& l) const {
    auto it = index_.find(l);
    return it == index_.end() ? -1 : it->second;
  }

  bool leq(std::size_t i, std::size_t j) const { return up_[i].test(j); }
  const Bitset& upset_of(std::size_t i) const { return up_[i]; }
  const Bitset& downset_of(std::size_t i) const { return down_[i]; }

  FinPoset reversed() const {
    FinPoset p;
    p.labels_ = labels_;
    p.index_ = index_;
    p.up_ = down_;
    p.down_ = up_;
    return p;
  }

  // Hasse diagram edges (i covered by j).
  std::vector<std::pair<std::size_t, std::size_t>> cover_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i) {
      Bitset strict_up = up_[i];
      strict_up.reset(i);
      strict_up.for_each([&](std::size_t j) {
        Bitset between = strict_up & down_[j];
        between.reset(j);
        if (between.none()) out.emplace_back(i, j);
      });
    }
    return out;
  }

  std::vector<std::size_t> minimal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (down_[i].count() == 1) out.push_back(i);
    return out;
  }

  std::optional<std::size_t> bottom() const {
    for (std::size_t i = 0; i < size(); ++i)
      if (up_[i].count() == size()) return i;
    return std::nullopt;
  }

  bool operator==(const FinPoset& o) const {
    return labels_ == o.labels_ && up_ == o.up_;
  }

 private:
  void init_labels(const std::vector<std::string>& labels) {
    labels_ = labels;
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (!index_.emplace(labels_[i], static_cast<int>(i)).second)
        throw InvalidInput("duplicate label: " + labels_[i]);
    }
  }
  void fill_down() {
    const std::size_t n = size();
    down_.assign(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i)
      up_[i].for_each([&](std::size_t j) { down_[j].set(i); });
  }

  std::vector<std::string> labels_;
  std::vector<Bitset> up_;    // up_[i] = { j : i <= j }
  std::vector<Bitset> down_;  // down_[j] = { i : i <= j }
  std::unordered_map<std::string, int> index_;
};

// Componentwise order on pairs, labels "(p,q)".
inline FinPoset product(const FinPoset& p, const FinPoset& q) {
  const std::size_t np = p.size(), nq = q.size(), n = np * nq;
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nq; ++j)
      labels.push_back(detail::tuple_label(p.label(i), q.label(j)));
  std::vector<Bitset> rows(n, Bitset(n));
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = 0; j < nq; ++j) {
      Bitset& row = rows[i * nq + j];
      p.upset_of(i).for_each([&](std::size_t i2) {
        q.upset_of(j).for_each([&](std::size_t j2) { row.set(i2 * nq + j2); });
      });
    }
  return FinPoset::from_rows(std::move(labels), std::move(rows));
}

// Order-preserving map between posets; validated on construction.
struct MonotoneMap {
  const FinPoset* source = nullptr;
  const FinPoset* target = nullptr;
  std::vector<int> map;  // element index in source -> element index in target
};

inline MonotoneMap make_monotone(const FinPoset& s, const FinPoset& t, std::vector<int> map) {
  if (map.size() != s.size()) throw InvalidInput("map size does not match source");
  for (int v : map)
    if (v < 0 || static_cast<std::size_t>(v) >= t.size())
      throw InvalidInput("map value out of range");
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j)
      if (s.leq(i, j) && !t.leq(static_cast<std::size_t>(map[i]), static_cast<std::size_t>(map[j])))
        throw InvalidInput("map not monotone at (" + s.label(i) + "," + s.label(j) + ")");
  return MonotoneMap{&s, &t, std::move(map)};
}

namespace detail {

// Iterated signature refinement (order analogue of colour refinement):
// start from (|down|, |up|) and fold in the sorted neighbour signatures
// until stable. Used to cut the isomorphism search space.
inline std::vector<std::uint64_t> refine_signatures(const FinPoset& p) {
  const std::size_t n = p.size();
  std::vector<std::uint64_t> sig(n);
  for (std::size_t i = 0; i < n; ++i)
    sig[i] = (static_cast<std::uint64_t>(p.downset_of(i).count()) << 32) |
             p.upset_of(i).count();
  for (std::size_t round = 0; round < n; ++round) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> dn, up;
      p.downset_of(i).for_each([&](std::size_t j) {
        if (j != i) dn.push_back(sig[j]);
      });
      p.upset_of(i).for_each([&](std::size_t j) {
        if (j != i) up.push_back(sig[j]);
      });
      std::sort(dn.begin(), dn.end());
      std::sort(up.begin(), up.end());
      std::uint64_t h = sig[i] * 0x9e3779b97f4a7c15ull + 1;
      for (auto v : dn) h = (h ^ v) * 0xbf58476d1ce4e5b9ull;
      h = h * 31 + 0xd6e8feb86659fd93ull;
      for (auto v : up) h = (h ^ v) * 0x94d049bb133111ebull;
      next[i] = h;
    }
    if (next == sig) break;
    sig = std::move(next);
  }
  return sig;
}

}  // namespace detail

// Exhaustive backtracking search for an order isomorphism, pruned by
// signature refinement. Returns the image index of each source element,
// or nullopt when no isomorphism exists.
inline std::optional<std::vector<int>> poset_isomorphism(const FinPoset& p, const FinPoset& q) {
  const std::size_t n = p.size();
  if (q.size() != n) return std::nullopt;
  if (n == 0) return std::vector<int>{};

  auto sp = detail::refine_signatures(p);
  auto sq = detail::refine_signatures(q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> q_class;
  for (std::size_t j = 0; j < n; ++j) q_class[sq[j]].push_back(j);

  // Assign rare signature classes first.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    std::size_t ca = q_class[sp[a]].size(), cb = q_class[sp[b]].size();
    if (ca != cb) return ca < cb;
    return a < b;
  });

  std::vector<int> img(n, -1);
  std::vector<bool> used(n, false);
  std::vector<std::size_t> assigned;

  auto consistent = [&](std::size_t i, std::size_t j) {
    for (std::size_t a : assigned) {
      std::size_t b = static_cast<std::size_t>(img[a]);
      if (p.leq(i, a) != q.leq(j, b)) return false;
      if (p.leq(a, i) != q.leq(b, j)) return false;
    }
    return true;
  };

  std::size_t depth = 0;
  std::vector<std::size_t> choice(n, 0);
  while (true) {
    if (depth == n) {
      return img;
    }
    std::size_t i = order[depth];
    const auto& cands = q_class[sp[i]];
    bool advanced = false;
    for (std::size_t& c = choice[depth]; c < cands.size(); ++c) {
      std::size_t j = cands[c];
      if (used[j] || !consistent(i, j)) continue;
      img[i] = static_cast<int>(j);
      used[j] = true;
      assigned.push_back(i);
      ++c;
      ++depth;
      advanced = true;
      break;
    }
    if (advanced) continue;
    choice[depth] = 0;
    if (depth == 0) return std::nullopt;
    --depth;
    std::size_t prev = order[depth];
    used[static_cast<std::size_t>(img[prev])] = false;
    img[prev] = -1;
    assigned.pop_back();
  }
}

}  // namespace spclat
