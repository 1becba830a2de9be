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
#include <string>
#include <utility>
#include <vector>

#include "spclat/bitset.hpp"
#include "spclat/dlat.hpp"
#include "spclat/error.hpp"
#include "spclat/oag.hpp"
#include "spclat/semilattice.hpp"
#include "spclat/spectral.hpp"

namespace spclat {

inline constexpr std::size_t kSaturateCap = 4096;

// --- Saturated sets ---------------------------------------------------

// Finite subset of a partially ordered abelian group that is closed
// under binary joins. Elements are kept normalized, sorted and unique.
struct SaturatedSet {
  const OrderedAbelianGroup* group = nullptr;
  std::vector<GroupElement> elements;

  bool contains(const GroupElement& e) const {
    return std::binary_search(elements.begin(), elements.end(), e);
  }
  std::size_t index_of(const GroupElement& e) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), e);
    if (it == elements.end() || *it != e)
      throw InvalidInput("element " + group->to_string(e) + " is not in the saturated set");
    return static_cast<std::size_t>(it - elements.begin());
  }
};

namespace detail {

inline std::vector<GroupElement> normalize_unique(const OrderedAbelianGroup& g,
                                                  std::vector<GroupElement> elems) {
  for (auto& e : elems) g.normalize(e);
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  return elems;
}

}  // namespace detail

// Closes `seed` under binary joins. A pair with no least upper bound in
// the group makes saturation impossible and raises JoinsMissing; a
// closure past `cap` elements raises CapacityExceeded.
inline SaturatedSet saturate(const OrderedAbelianGroup& g, std::vector<GroupElement> seed,
                             std::size_t bound, std::size_t cap = kSaturateCap) {
  std::vector<GroupElement> work = detail::normalize_unique(g, std::move(seed));
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      JoinOutcome out = g.try_join(work[i], work[j], bound);
      if (out.kind != JoinOutcome::Kind::Found)
        throw JoinsMissing("join of " + g.to_string(work[i]) + " and " + g.to_string(work[j]) +
                           " does not exist: " + out.reason);
      if (std::find(work.begin(), work.end(), out.join) == work.end()) {
        if (work.size() >= cap)
          throw CapacityExceeded("saturation exceeds " + std::to_string(cap) + " elements");
        work.push_back(std::move(out.join));
      }
    }
  std::sort(work.begin(), work.end());
  return SaturatedSet{&g, std::move(work)};
}

inline SaturatedSet saturate(const OrderedAbelianGroup& g, std::vector<GroupElement> seed) {
  return saturate(g, std::move(seed), g.default_bound());
}

// Validates that `elems` already is saturated, without adding anything.
inline SaturatedSet make_saturated(const OrderedAbelianGroup& g, std::vector<GroupElement> elems,
                                   std::size_t bound) {
  SaturatedSet b{&g, detail::normalize_unique(g, std::move(elems))};
  for (std::size_t i = 0; i < b.elements.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      JoinOutcome out = g.try_join(b.elements[i], b.elements[j], bound);
      if (out.kind != JoinOutcome::Kind::Found)
        throw JoinsMissing("join of " + g.to_string(b.elements[i]) + " and " +
                           g.to_string(b.elements[j]) + " does not exist: " + out.reason);
      if (!b.contains(out.join))
        throw InvalidInput("set is not saturated: the join " + g.to_string(out.join) +
                           " of " + g.to_string(b.elements[i]) + " and " +
                           g.to_string(b.elements[j]) + " is missing");
    }
  return b;
}

inline SaturatedSet make_saturated(const OrderedAbelianGroup& g, std::vector<GroupElement> elems) {
  return make_saturated(g, std::move(elems), g.default_bound());
}

// --- Filtered presentations -------------------------------------------

// Object of the filtered world, presented by its restriction to a
// saturated set: a support value in a fixed Zariski lattice for every
// base element.
struct FilteredPresentation {
  SaturatedSet base;
  const DistLattice* zar = nullptr;
  std::vector<std::size_t> values;  // parallel to base.elements

  std::size_t value_at(const GroupElement& e) const { return values[base.index_of(e)]; }
};

// --- Theta sets --------------------------------------------------------

// theta(B, a) = the window classes J with (a + J) meeting B only in a:
// J survives unless some b in B, b != a, has b - a in the cone and
// dominated by a multiple of the class representative. The result is
// always downward closed, i.e. an element of the free lattice on the
// window classes.
inline Bitset theta(const SaturatedSet& b, const GroupElement& a_in, const ArchSemilattice& arch,
                    std::size_t bound) {
  const OrderedAbelianGroup& g = *b.group;
  GroupElement a = a_in;
  g.normalize(a);
  b.index_of(a);  // precondition: a is a base element

  const std::size_t n = arch.classes.size();
  Bitset out = Bitset::full(n);
  for (const GroupElement& e : b.elements) {
    if (e == a) continue;
    GroupElement d = g.sub(e, a);
    ConeDecision in_cone = g.cone_member(d, bound);
    if (in_cone.decision == Decision::Inconclusive)
      throw Inconclusive("cone membership of " + g.to_string(d) +
                         " is inconclusive within bound " + std::to_string(bound));
    if (in_cone.decision == Decision::No) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!out.test(j)) continue;
      PrincipalDecision dom = g.principal_leq(d, arch.classes[j], bound);
      if (dom.decision == Decision::Inconclusive)
        throw Inconclusive("domination of " + g.to_string(d) + " by the class of " +
                           g.to_string(arch.classes[j]) + " is inconclusive within bound " +
                           std::to_string(bound));
      if (dom.decision == Decision::Yes) out.reset(j);
    }
  }
  // Down-closedness in the class order makes the set an element of the
  // free distributive lattice on the window classes.
  const FinPoset& cls = arch.semilattice.poset();
  for (std::size_t j = 0; j < n; ++j)
    if (out.test(j) && !cls.downset_of(j).subset_of(out))
      throw Error("theta set is not downward closed at class " + cls.label(j));
  return out;
}

inline Bitset theta(const SaturatedSet& b, const GroupElement& a, const ArchSemilattice& arch) {
  return theta(b, a, arch, b.group->default_bound());
}

// --- Day-convolution support -------------------------------------------

// Element of zar_c (x) Free(window classes), written as a class-indexed
// tuple of zar_c elements; such tuples are antitone in the class order.
struct DayElement {
  std::vector<std::size_t> values;  // per window class: element of zar_c

  bool operator==(const DayElement& o) const { return values == o.values; }
  bool operator!=(const DayElement& o) const { return values != o.values; }
};

// Support formula: s(F)[J] = join of the values of F at the base
// elements whose theta set contains J.
inline DayElement day_support(const FilteredPresentation& f, const ArchSemilattice& arch,
                              std::size_t bound) {
  const DistLattice& zar = *f.zar;
  const std::size_t n = arch.classes.size();
  DayElement s;
  s.values.assign(n, zar.bottom());
  for (std::size_t i = 0; i < f.base.elements.size(); ++i) {
    Bitset th = theta(f.base, f.base.elements[i], arch, bound);
    th.for_each([&](std::size_t j) { s.values[j] = zar.join(s.values[j], f.values[i]); });
  }
  return s;
}

inline DayElement day_support(const FilteredPresentation& f, const ArchSemilattice& arch) {
  return day_support(f, arch, f.base.group->default_bound());
}

// --- Presentation constructors ----------------------------------------

// Presentation of the generator c{0/a_1}...{0/a_n}: the base is the
// saturation of all subset sums of the a_i, the value is c at 0 and
// bottom everywhere else.
inline FilteredPresentation generator(const DistLattice& zar, std::size_t c,
                                      const OrderedAbelianGroup& g,
                                      const std::vector<GroupElement>& a_list, std::size_t bound) {
  if (c >= zar.size()) throw InvalidInput("value index out of range");
  if (a_list.size() > 12)
    throw SizeGuard("generator list of " + std::to_string(a_list.size()) +
                    " elements spans too many subset sums");
  for (const auto& a : a_list) {
    ConeDecision d = g.cone_member(a, bound);
    if (d.decision == Decision::No)
      throw NotInCone("generator element " + g.to_string(a) + " is not in the cone: " + d.reason);
    if (d.decision == Decision::Inconclusive)
      throw Inconclusive("cone membership of " + g.to_string(a) +
                         " is inconclusive within bound " + std::to_string(bound));
  }
  std::vector<GroupElement> sums;
  for (std::size_t mask = 0; mask < (std::size_t{1} << a_list.size()); ++mask) {
    GroupElement sum = g.zero();
    for (std::size_t i = 0; i < a_list.size(); ++i)
      if (mask >> i & 1) sum = g.add(sum, a_list[i]);
    sums.push_back(std::move(sum));
  }
  FilteredPresentation f;
  f.base = saturate(g, std::move(sums), bound);
  f.zar = &zar;
  f.values.assign(f.base.elements.size(), zar.bottom());
  f.values[f.base.index_of(g.zero())] = c;
  return f;
}

inline FilteredPresentation generator(const DistLattice& zar, std::size_t c,
                                      const OrderedAbelianGroup& g,
                                      const std::vector<GroupElement>& a_list) {
  return generator(zar, c, g, a_list, g.default_bound());
}

// Re-presents F over a larger saturated base: the value at b2 is the
// value at the greatest base element below b2 (unique because the base
// is join-closed), or bottom when nothing lies below.
inline FilteredPresentation extend_presentation(const FilteredPresentation& f,
                                                const SaturatedSet& b2, std::size_t bound) {
  const OrderedAbelianGroup& g = *f.base.group;
  if (b2.group != f.base.group)
    throw InvalidInput("presentation and extension live over different groups");
  for (const auto& e : f.base.elements)
    if (!b2.contains(e))
      throw InvalidInput("extension must contain the base; missing " + g.to_string(e));

  auto definite_leq = [&](const GroupElement& x, const GroupElement& y) {
    ConeDecision d = g.leq(x, y, bound);
    if (d.decision == Decision::Inconclusive)
      throw Inconclusive("comparison of " + g.to_string(x) + " and " + g.to_string(y) +
                         " is inconclusive within bound " + std::to_string(bound));
    return d.decision == Decision::Yes;
  };

  FilteredPresentation out;
  out.base = b2;
  out.zar = f.zar;
  out.values.assign(b2.elements.size(), f.zar->bottom());
  for (std::size_t i = 0; i < b2.elements.size(); ++i) {
    const GroupElement& target = b2.elements[i];
    std::optional<GroupElement> greatest;
    for (const auto& a : f.base.elements) {
      if (!definite_leq(a, target)) continue;
      if (!greatest) {
        greatest = a;
        continue;
      }
      if (definite_leq(a, *greatest)) continue;
      if (definite_leq(*greatest, a)) {
        greatest = a;
        continue;
      }
      JoinOutcome join = g.try_join(*greatest, a, bound);
      if (join.kind != JoinOutcome::Kind::Found || !f.base.contains(join.join) ||
          !definite_leq(join.join, target))
        throw Error("base is not join-closed below " + g.to_string(target));
      greatest = std::move(join.join);
    }
    if (greatest) out.values[i] = f.value_at(*greatest);
  }
  return out;
}

inline FilteredPresentation extend_presentation(const FilteredPresentation& f,
                                                const SaturatedSet& b2) {
  return extend_presentation(f, b2, f.base.group->default_bound());
}

// Translation F{g}: every base element moves by g, values follow their
// elements. Translation is an order automorphism, so the base stays
// saturated.
inline FilteredPresentation shift(const FilteredPresentation& f, const GroupElement& g_elem) {
  const OrderedAbelianGroup& g = *f.base.group;
  std::vector<std::pair<GroupElement, std::size_t>> moved;
  moved.reserve(f.base.elements.size());
  for (std::size_t i = 0; i < f.base.elements.size(); ++i)
    moved.emplace_back(g.add(f.base.elements[i], g_elem), f.values[i]);
  std::sort(moved.begin(), moved.end());
  FilteredPresentation out;
  out.base.group = f.base.group;
  out.zar = f.zar;
  for (auto& [e, v] : moved) {
    out.base.elements.push_back(std::move(e));
    out.values.push_back(v);
  }
  return out;
}

// --- Theorem constructors ----------------------------------------------

// Zariski lattice of pointwise-tensor functor categories on a discrete
// shape: the named power of zar_c, together with the tensor-by-a-power-
// set construction and a verified isomorphism between the two.
struct PointwiseResult {
  PowerResult power;
  TensorResult cross;  // tensor(zar_c, power set of the names)
  std::vector<std::size_t> iso;  // power element -> cross element

  const DistLattice& lattice() const { return power.lattice; }
};

inline PointwiseResult zar_pointwise(const DistLattice& zar_c,
                                     const std::vector<std::string>& names,
                                     std::size_t cap = kDefaultLatticeCap) {
  PointwiseResult out;
  out.power = power(zar_c, names, cap);
  out.cross = tensor(zar_c, from_downsets(FinPoset::antichain(names), cap), cap);

  // Ground bit (s,j) of the power is bit (j,s) of the cross tensor;
  // swapping bits is a bijection of downsets.
  const std::size_t k = zar_c.ground().size();
  const std::size_t s_count = names.size();
  out.iso.assign(out.power.lattice.size(), 0);
  for (std::size_t e = 0; e < out.power.lattice.size(); ++e) {
    Bitset m(k * s_count);
    out.power.lattice.mask(e).for_each([&](std::size_t bit) {
      const std::size_t s = bit / k, j = bit % k;
      m.set(j * s_count + s);
    });
    int idx = out.cross.lattice.index_of_mask(m);
    if (idx < 0) throw Error("power element has no tensor counterpart");
    out.iso[e] = static_cast<std::size_t>(idx);
  }
  make_dlat_morphism(out.power.lattice, out.cross.lattice, out.iso);
  std::vector<char> hit(out.cross.lattice.size(), 0);
  for (std::size_t v : out.iso) hit[v] = 1;
  if (std::find(hit.begin(), hit.end(), 0) != hit.end())
    throw Error("power-to-tensor comparison is not onto");
  return out;
}

// Support of a pointwise presentation: the tuple of its values.
inline std::size_t support_pointwise(const PointwiseResult& pw, const DistLattice& zar_c,
                                     const std::vector<std::size_t>& component_values) {
  return pw.power.from_components(zar_c, component_values);
}

// Support of the distinguished generator X(k): the unit at one name.
inline std::size_t x_gen(const PointwiseResult& pw, const DistLattice& zar_c,
                         std::size_t name_index) {
  std::vector<std::size_t> comps(pw.power.names.size(), zar_c.bottom());
  comps.at(name_index) = zar_c.top();
  return pw.power.from_components(zar_c, comps);
}

// Zariski lattice of sheaves on spec(l): zar_c tensored with the
// Booleanization of l.
struct SheafResult {
  BooleanizeResult boolean_part;  // booleanize(l)
  TensorResult tensor_part;       // tensor(zar_c, booleanize(l))

  const DistLattice& lattice() const { return tensor_part.lattice; }
};

inline SheafResult zar_sheaf(const DistLattice& zar_c, const DistLattice& l,
                             std::size_t cap = kDefaultLatticeCap) {
  SheafResult out;
  out.boolean_part = booleanize(l, cap);
  out.tensor_part = tensor(zar_c, out.boolean_part.lattice, cap);
  return out;
}

// Spectrum side of zar_sheaf: spc of the lattice, with a verified
// homeomorphism onto (constructible spectrum of l) x spc(zar_c).
struct SheafSpace {
  SpectralSpace space;
  SpectralSpace product;
  std::vector<int> homeo;  // point of `space` -> point of `product`
};

inline SheafSpace spc_sheaf(const DistLattice& zar_c, const DistLattice& l, const SheafResult& r,
                            std::size_t guard = kDefaultHomeoGuard) {
  SheafSpace out;
  out.space = spc(r.tensor_part.lattice);
  out.product = space_product(constructible(spec(l)), spc(zar_c));
  auto h = homeomorphism(out.space, out.product, guard);
  if (!h) throw Error("sheaf spectrum is not the expected product");
  out.homeo = std::move(*h);
  return out;
}

// Zariski lattice of Day-convolution functor categories on an ordered
// group: zar_c tensored with the free lattice on the window classes.
// The joins hypothesis is witnessed by saturating the window first.
struct DayContext {
  const DistLattice* zar = nullptr;
  ArchSemilattice arch;
  FreeResult free_part;          // free_dlat(arch.semilattice)
  TensorResult tensor_part;      // tensor(zar_c, free_part.lattice)
  SaturatedSet window_closure;   // join closure of {0} and the window

  const DistLattice& lattice() const { return tensor_part.lattice; }
  SpectralSpace space() const { return spc(tensor_part.lattice); }
};

inline DayContext zar_day(const DistLattice& zar_c, const OrderedAbelianGroup& g,
                          const std::vector<GroupElement>& window, std::size_t bound,
                          std::size_t cap = kDefaultLatticeCap) {
  DayContext out;
  out.zar = &zar_c;
  std::vector<GroupElement> seed = window;
  seed.push_back(g.zero());
  out.window_closure = saturate(g, std::move(seed), bound);
  out.arch = arch(g, window, bound);
  out.free_part = free_dlat(out.arch.semilattice, cap);
  out.tensor_part = tensor(zar_c, out.free_part.lattice, cap);
  return out;
}

inline DayContext zar_day(const DistLattice& zar_c, const OrderedAbelianGroup& g,
                          const std::vector<GroupElement>& window) {
  return zar_day(zar_c, g, window, g.default_bound());
}

// A class-indexed tuple as an element of the Day lattice: ground bit
// (p, J) is set when p lies in the zar_c element at class J. Fails on
// tuples that are not antitone in the class order.
inline std::size_t day_element_to_lattice(const DayElement& d, const DayContext& ctx) {
  const DistLattice& zar = *ctx.zar;
  const std::size_t n = ctx.arch.classes.size();
  if (d.values.size() != n) throw InvalidInput("tuple length does not match the class count");
  for (std::size_t v : d.values)
    if (v >= zar.size()) throw InvalidInput("tuple value out of range");
  Bitset m(zar.ground().size() * n);
  for (std::size_t j = 0; j < n; ++j)
    zar.mask(d.values[j]).for_each([&](std::size_t p) { m.set(p * n + j); });
  int idx = ctx.tensor_part.lattice.index_of_mask(m);
  if (idx < 0)
    throw InvalidInput("tuple is not antitone in the class order, so it is not a lattice element");
  return static_cast<std::size_t>(idx);
}

inline DayElement lattice_to_day_element(std::size_t elem, const DayContext& ctx) {
  const DistLattice& zar = *ctx.zar;
  const std::size_t n = ctx.arch.classes.size();
  DayElement d;
  d.values.assign(n, zar.bottom());
  for (std::size_t j = 0; j < n; ++j) {
    Bitset part(zar.ground().size());
    ctx.tensor_part.lattice.mask(elem).for_each([&](std::size_t bit) {
      if (bit % n == j) part.set(bit / n);
    });
    d.values[j] = zar.element_of_mask(part);
  }
  return d;
}

// Theta set as an element of the free lattice on the window classes.
inline std::size_t theta_free_element(const Bitset& th, const DayContext& ctx) {
  return ctx.free_part.lattice.element_of_mask(th);
}

}  // namespace spclat
