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

// Exhaustive cross-checks of the categorical constructions at desk scale:
// morphism enumeration between small distributive lattices, universal
// property verifiers for Free / Booleanization / tensor, Birkhoff round
// trips, and isomorphism search.  Every verifier reports how many
// instances it checked and, on failure, a replayable counterexample
// description; guard-bounded instances are skipped and counted rather
// than silently dropped.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "spclat/dlat.hpp"
#include "spclat/enumerate.hpp"
#include "spclat/error.hpp"
#include "spclat/poset.hpp"
#include "spclat/semilattice.hpp"
#include "spclat/spectral.hpp"

namespace spclat {

/// Cap on the a-priori candidate count |target|^(#join-irreducibles of the
/// source) for one morphism enumeration.  The search space of a bounded
/// lattice morphism is its restriction to join-irreducibles, so the guard
/// is taken over that restriction rather than over all elements.
inline constexpr std::size_t kDefaultMorphismGuard = 10'000'000;

/// Outcome of one verifier run.  passed() means no counterexample was
/// found among the instances actually checked; instances_skipped counts
/// guard-bounded instances that were not attempted.
struct CheckReport {
  std::string name;
  std::size_t instances_checked = 0;
  std::size_t instances_skipped = 0;
  std::optional<std::string> counterexample;

  bool passed() const { return !counterexample.has_value(); }
};

namespace detail {

inline std::vector<std::size_t> linear_extension(const FinPoset& p) {
  const std::size_t n = p.size();
  std::vector<char> used(n, 0);
  std::vector<std::size_t> out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    for (std::size_t i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < n && minimal; ++j)
        if (!used[j] && j != i && p.leq(j, i)) minimal = false;
      if (minimal) {
        used[i] = 1;
        out.push_back(i);
        break;
      }
    }
  }
  return out;
}

inline std::string map_to_string(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + "]";
}

}  // namespace detail

/// All bounded-lattice morphisms source -> target (maps preserving 0, 1,
/// joins and meets), each returned as a full element map.  A morphism is
/// determined by its values on join-irreducibles, and a monotone
/// assignment on them extends to a morphism exactly when it sends the top
/// to the top and satisfies the meet law on pairs of join-irreducibles;
/// the search runs over those assignments with monotone pruning, in
/// deterministic order (linear extension of the irreducibles, candidate
/// values ascending).  Throws SizeGuard when |target|^#irreducibles
/// exceeds the guard.
inline std::vector<std::vector<std::size_t>> enumerate_dlat_morphisms(
    const DistLattice& source, const DistLattice& target,
    std::size_t guard = kDefaultMorphismGuard) {
  const FinPoset& g = source.ground();
  const std::size_t k = g.size();
  const std::size_t nt = target.size();
  if (std::pow(static_cast<double>(nt), static_cast<double>(k)) >
      static_cast<double>(guard))
    throw SizeGuard("morphism enumeration needs " + std::to_string(nt) + "^" +
                    std::to_string(k) +
                    " candidates, over the guard of " + std::to_string(guard) +
                    "; pass a larger guard");

  const std::vector<std::size_t> ext = detail::linear_extension(g);
  std::vector<std::size_t> val(k, 0);
  std::vector<std::vector<std::size_t>> out;

  auto emit = [&]() {
    // Top must go to top (the empty-source case degenerates correctly:
    // bottom == top in the source forces a trivial target).
    std::size_t top_image = target.bottom();
    for (std::size_t a = 0; a < k; ++a) top_image = target.join(top_image, val[a]);
    if (top_image != target.top()) return;
    // Meet law on pairs of irreducibles: the image of ji(a) /\ ji(b),
    // computed from values below it, must agree with the target meet.
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        Bitset both = g.downset_of(a) & g.downset_of(b);
        std::size_t lhs = target.bottom();
        both.for_each([&](std::size_t c) { lhs = target.join(lhs, val[c]); });
        if (lhs != target.meet(val[a], val[b])) return;
      }
    std::vector<std::size_t> full(source.size());
    for (std::size_t x = 0; x < source.size(); ++x) {
      std::size_t image = target.bottom();
      source.mask(x).for_each([&](std::size_t c) { image = target.join(image, val[c]); });
      full[x] = image;
    }
    out.push_back(std::move(full));
  };

  auto dfs = [&](auto&& self, std::size_t t) -> void {
    if (t == k) {
      emit();
      return;
    }
    const std::size_t a = ext[t];
    for (std::size_t v = 0; v < nt; ++v) {
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s) {
        const std::size_t b = ext[s];
        if (g.leq(b, a) && !target.leq(val[b], v)) ok = false;
        if (g.leq(a, b) && !target.leq(v, val[b])) ok = false;
      }
      if (!ok) continue;
      val[a] = v;
      self(self, t + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

/// All join- and bottom-preserving maps from a semilattice into the join
/// reduct of a lattice, as full element maps in deterministic order.
/// The search assigns values along a linear extension with monotone
/// pruning and forced values (bottom, and any element that is a join of
/// two earlier ones); each candidate is then verified against every pair.
inline std::vector<std::vector<std::size_t>> enumerate_slat_maps(
    const UpperSemilattice& u, const DistLattice& target) {
  const std::size_t n = u.size();
  const std::size_t nt = target.size();
  const std::vector<std::size_t> ext = detail::linear_extension(u.poset());
  std::vector<std::size_t> val(n, 0);
  std::vector<std::vector<std::size_t>> out;

  auto emit = [&]() {
    if (val[u.bottom()] != target.bottom()) return;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b)
        if (val[u.join(a, b)] != target.join(val[a], val[b])) return;
    out.push_back(val);
  };

  auto dfs = [&](auto&& self, std::size_t t) -> void {
    if (t == n) {
      emit();
      return;
    }
    const std::size_t x = ext[t];
    std::optional<std::size_t> forced;
    if (x == u.bottom()) forced = target.bottom();
    for (std::size_t s1 = 0; s1 < t && !forced; ++s1)
      for (std::size_t s2 = s1; s2 < t && !forced; ++s2) {
        const std::size_t a = ext[s1], b = ext[s2];
        if (u.join(a, b) == x && a != x && b != x)
          forced = target.join(val[a], val[b]);
      }
    for (std::size_t v = 0; v < nt; ++v) {
      if (forced && v != *forced) continue;
      bool ok = true;
      for (std::size_t s = 0; s < t && ok; ++s) {
        const std::size_t b = ext[s];
        if (u.leq(b, x) && !target.leq(val[b], v)) ok = false;
        if (u.leq(x, b) && !target.leq(v, val[b])) ok = false;
      }
      if (!ok) continue;
      val[x] = v;
      self(self, t + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

/// Lattice isomorphism search.  Two finite distributive lattices are
/// isomorphic exactly when their posets of join-irreducibles are, so the
/// backtracking runs over those posets; absence of a poset isomorphism is
/// therefore a definitive "no" (nullopt), not an open question.  Throws
/// SizeGuard when either side has more than `guard` irreducibles.
inline std::optional<std::vector<std::size_t>> find_isomorphism(
    const DistLattice& l, const DistLattice& m,
    std::size_t guard = kDefaultHomeoGuard) {
  if (l.size() != m.size() || l.ground().size() != m.ground().size())
    return std::nullopt;
  if (l.ground().size() > guard)
    throw SizeGuard("isomorphism search over " +
                    std::to_string(l.ground().size()) +
                    " join-irreducibles exceeds the guard of " +
                    std::to_string(guard) + "; pass a larger guard");
  auto iso = poset_isomorphism(l.ground(), m.ground());
  if (!iso) return std::nullopt;
  std::vector<std::size_t> map(l.size());
  const std::size_t nm = m.ground().size();
  for (std::size_t x = 0; x < l.size(); ++x) {
    Bitset image(nm);
    l.mask(x).for_each(
        [&](std::size_t a) { image.set(static_cast<std::size_t>((*iso)[a])); });
    map[x] = m.element_of_mask(image);
  }
  return map;
}

// --- Universal property verifiers -----------------------------------

/// Checks a proposed free distributive lattice on `u`: against every
/// target in the corpus of distributive lattices with at most target_bound
/// elements, every join/bottom-preserving map out of `u` must extend to
/// exactly one lattice morphism out of the candidate through the unit.
/// Feeding a wrong candidate (say, a 3-chain's free lattice with the
/// middle collapsed) produces a counterexample naming the map and its
/// extension count.
inline CheckReport check_free_universal_against(
    const UpperSemilattice& u, const DistLattice& candidate,
    const std::vector<std::size_t>& unit, std::size_t target_bound = 6,
    std::size_t guard = kDefaultMorphismGuard,
    std::string name = "free_universal") {
  CheckReport report{std::move(name), 0, 0, std::nullopt};
  if (unit.size() != u.size()) {
    report.counterexample = "unit has " + std::to_string(unit.size()) +
                            " entries for a semilattice of size " +
                            std::to_string(u.size());
    return report;
  }
  // The unit itself must be join/bottom-preserving.
  if (unit[u.bottom()] != candidate.bottom()) {
    report.counterexample = "unit does not preserve the bottom";
    return report;
  }
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = a; b < u.size(); ++b)
      if (unit[u.join(a, b)] != candidate.join(unit[a], unit[b])) {
        report.counterexample = "unit does not preserve the join of " +
                                u.label(a) + " and " + u.label(b);
        return report;
      }
  const std::vector<DistLattice> targets = all_dist_lattices(target_bound);
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    const DistLattice& target = targets[ti];
    std::vector<std::vector<std::size_t>> extensions;
    try {
      extensions = enumerate_dlat_morphisms(candidate, target, guard);
    } catch (const SizeGuard&) {
      ++report.instances_skipped;
      continue;
    }
    for (const auto& phi : enumerate_slat_maps(u, target)) {
      ++report.instances_checked;
      std::size_t count = 0;
      for (const auto& h : extensions) {
        bool matches = true;
        for (std::size_t x = 0; x < u.size() && matches; ++x)
          if (h[unit[x]] != phi[x]) matches = false;
        if (matches) ++count;
      }
      if (count != 1) {
        report.counterexample =
            "target #" + std::to_string(ti) + " (size " +
            std::to_string(target.size()) + "): map " +
            detail::map_to_string(phi) + " has " + std::to_string(count) +
            " extensions instead of 1";
        return report;
      }
    }
  }
  return report;
}

/// check_free_universal_against applied to the library's own free
/// construction.
inline CheckReport check_free_universal(const UpperSemilattice& u,
                                        std::size_t target_bound = 6,
                                        std::size_t guard = kDefaultMorphismGuard) {
  FreeResult f = free_dlat(u);
  return check_free_universal_against(u, f.lattice, f.unit, target_bound, guard);
}

/// Checks a proposed Boolean reflection of `l`: against every Boolean
/// algebra in the corpus with at most target_bound elements, every
/// lattice morphism out of `l` must factor through the unit in exactly
/// one way.
inline CheckReport check_boolean_reflection_against(
    const DistLattice& l, const DistLattice& candidate,
    const std::vector<std::size_t>& unit, std::size_t target_bound = 6,
    std::size_t guard = kDefaultMorphismGuard,
    std::string name = "boolean_reflection") {
  CheckReport report{std::move(name), 0, 0, std::nullopt};
  try {
    make_dlat_morphism(l, candidate, unit);
  } catch (const InvalidInput& e) {
    report.counterexample = std::string("unit is not a lattice morphism: ") + e.what();
    return report;
  }
  if (!candidate.boolean()) {
    report.counterexample = "candidate is not a Boolean algebra";
    return report;
  }
  const std::vector<DistLattice> targets = all_dist_lattices(target_bound);
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    const DistLattice& target = targets[ti];
    if (!target.boolean()) continue;
    std::vector<std::vector<std::size_t>> fs, hs;
    try {
      fs = enumerate_dlat_morphisms(l, target, guard);
      hs = enumerate_dlat_morphisms(candidate, target, guard);
    } catch (const SizeGuard&) {
      ++report.instances_skipped;
      continue;
    }
    for (const auto& f : fs) {
      ++report.instances_checked;
      std::size_t count = 0;
      for (const auto& h : hs) {
        bool matches = true;
        for (std::size_t x = 0; x < l.size() && matches; ++x)
          if (h[unit[x]] != f[x]) matches = false;
        if (matches) ++count;
      }
      if (count != 1) {
        report.counterexample =
            "Boolean target #" + std::to_string(ti) + " (size " +
            std::to_string(target.size()) + "): morphism " +
            detail::map_to_string(f) + " has " + std::to_string(count) +
            " factorizations instead of 1";
        return report;
      }
    }
  }
  return report;
}

/// check_boolean_reflection_against applied to the library's own
/// Booleanization.
inline CheckReport check_boolean_reflection(const DistLattice& l,
                                            std::size_t target_bound = 6,
                                            std::size_t guard = kDefaultMorphismGuard) {
  BooleanizeResult b = booleanize(l);
  return check_boolean_reflection_against(l, b.lattice, b.unit, target_bound, guard);
}

/// Checks a proposed coproduct of `l` and `m`: against every target in
/// the corpus, restriction along the two injections must be a bijection
/// between morphisms out of the candidate and pairs of morphisms out of
/// the factors.  A candidate that is merely a product (or either factor
/// with identity injections) fails the pair count.
inline CheckReport check_tensor_coproduct_against(
    const DistLattice& l, const DistLattice& m, const DistLattice& candidate,
    const std::vector<std::size_t>& inj_left,
    const std::vector<std::size_t>& inj_right, std::size_t target_bound = 6,
    std::size_t guard = kDefaultMorphismGuard,
    std::string name = "tensor_coproduct") {
  CheckReport report{std::move(name), 0, 0, std::nullopt};
  try {
    make_dlat_morphism(l, candidate, inj_left);
    make_dlat_morphism(m, candidate, inj_right);
  } catch (const InvalidInput& e) {
    report.counterexample = std::string("injection is not a lattice morphism: ") + e.what();
    return report;
  }
  const std::vector<DistLattice> targets = all_dist_lattices(target_bound);
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    const DistLattice& target = targets[ti];
    std::vector<std::vector<std::size_t>> fs, gs, hs;
    try {
      fs = enumerate_dlat_morphisms(l, target, guard);
      gs = enumerate_dlat_morphisms(m, target, guard);
      hs = enumerate_dlat_morphisms(candidate, target, guard);
    } catch (const SizeGuard&) {
      ++report.instances_skipped;
      continue;
    }
    ++report.instances_checked;
    std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>,
             std::size_t>
        seen;
    for (const auto& h : hs) {
      std::vector<std::size_t> rl(l.size()), rm(m.size());
      for (std::size_t x = 0; x < l.size(); ++x) rl[x] = h[inj_left[x]];
      for (std::size_t x = 0; x < m.size(); ++x) rm[x] = h[inj_right[x]];
      if (++seen[{std::move(rl), std::move(rm)}] > 1) {
        report.counterexample = "target #" + std::to_string(ti) +
                                ": two morphisms out of the candidate share "
                                "the same restriction pair";
        return report;
      }
    }
    if (hs.size() != fs.size() * gs.size()) {
      report.counterexample =
          "target #" + std::to_string(ti) + " (size " +
          std::to_string(target.size()) + "): expected " +
          std::to_string(fs.size() * gs.size()) + " morphisms out of the "
          "candidate, found " + std::to_string(hs.size());
      return report;
    }
  }
  return report;
}

/// check_tensor_coproduct_against applied to the library's own tensor.
inline CheckReport check_tensor_coproduct(const DistLattice& l,
                                          const DistLattice& m,
                                          std::size_t target_bound = 6,
                                          std::size_t guard = kDefaultMorphismGuard) {
  TensorResult t = tensor(l, m);
  return check_tensor_coproduct_against(l, m, t.lattice, t.inj_left,
                                        t.inj_right, target_bound, guard);
}

/// Rebuilds `l` as the downset lattice of its join-irreducible poset and
/// checks that the result is isomorphic to `l`.
inline CheckReport check_birkhoff_roundtrip(const DistLattice& l) {
  CheckReport report{"birkhoff_roundtrip", 1, 0, std::nullopt};
  DistLattice rebuilt = from_downsets(join_irreducibles(l));
  if (!find_isomorphism(l, rebuilt, l.ground().size()))
    report.counterexample = "downsets of the join-irreducible poset are not "
                            "isomorphic to the original lattice (size " +
                            std::to_string(l.size()) + ")";
  return report;
}

// --- Suites -----------------------------------------------------------

namespace detail {

inline void merge_into(CheckReport& total, const CheckReport& part) {
  total.instances_checked += part.instances_checked;
  total.instances_skipped += part.instances_skipped;
  if (!total.counterexample && part.counterexample)
    total.counterexample = part.counterexample;
}

}  // namespace detail

/// Free universal property over every semilattice with at most u_bound
/// elements, against targets of at most target_bound elements.
inline CheckReport suite_free_universal(std::size_t u_bound = 4,
                                        std::size_t target_bound = 5) {
  CheckReport total{"free_universal", 0, 0, std::nullopt};
  for (const UpperSemilattice& u : all_semilattices(u_bound))
    detail::merge_into(total, check_free_universal(u, target_bound));
  return total;
}

/// Boolean reflection over every distributive lattice with at most
/// l_bound elements.
inline CheckReport suite_boolean_reflection(std::size_t l_bound = 5,
                                            std::size_t target_bound = 6) {
  CheckReport total{"boolean_reflection", 0, 0, std::nullopt};
  for (const DistLattice& l : all_dist_lattices(l_bound))
    detail::merge_into(total, check_boolean_reflection(l, target_bound));
  return total;
}

/// Tensor coproduct property over every pair of distributive lattices
/// with at most l_bound elements each.
inline CheckReport suite_tensor_coproduct(std::size_t l_bound = 4,
                                          std::size_t target_bound = 5) {
  CheckReport total{"tensor_coproduct", 0, 0, std::nullopt};
  const std::vector<DistLattice> corpus = all_dist_lattices(l_bound);
  for (const DistLattice& l : corpus)
    for (const DistLattice& m : corpus)
      detail::merge_into(total, check_tensor_coproduct(l, m, target_bound));
  return total;
}

/// Birkhoff round trip over every distributive lattice with at most
/// corpus_bound elements, plus seeded random downset lattices.
inline CheckReport suite_birkhoff_roundtrip(std::size_t corpus_bound = 8,
                                            std::size_t random_count = 50,
                                            std::uint64_t seed = 20260815) {
  CheckReport total{"birkhoff_roundtrip", 0, 0, std::nullopt};
  for (const DistLattice& l : all_dist_lattices(corpus_bound))
    detail::merge_into(total, check_birkhoff_roundtrip(l));
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < random_count; ++i) {
    FinPoset p = random_poset(rng, 1 + (i % 6));
    detail::merge_into(total, check_birkhoff_roundtrip(from_downsets(p)));
  }
  return total;
}

/// Named suite dispatch for the command-line runner.  "all" runs every
/// suite; unknown names raise InvalidInput.
inline std::vector<CheckReport> oracle_suite(const std::string& which,
                                             std::uint64_t seed = 20260815) {
  std::vector<CheckReport> out;
  const bool all = which == "all";
  if (all || which == "free") out.push_back(suite_free_universal());
  if (all || which == "boolean") out.push_back(suite_boolean_reflection());
  if (all || which == "tensor") out.push_back(suite_tensor_coproduct());
  if (all || which == "birkhoff")
    out.push_back(suite_birkhoff_roundtrip(8, 50, seed));
  if (out.empty())
    throw InvalidInput("unknown oracle suite '" + which +
                       "' (expected free, boolean, tensor, birkhoff, or all)");
  return out;
}

}  // namespace spclat
