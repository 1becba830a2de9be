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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "spclat/dlat.hpp"
#include "spclat/error.hpp"
#include "spclat/poset.hpp"

namespace spclat {

inline constexpr std::size_t kDefaultHomeoGuard = 12;

// Finite spectral space. A finite space is determined by its
// specialization order (x <= y when x lies in the closure of {y});
// the open sets are exactly the up-closed subsets and are produced on
// demand, since their number can be exponential in the point count.
class SpectralSpace {
 public:
  SpectralSpace() = default;

  static SpectralSpace from_specialization(FinPoset p) {
    SpectralSpace x;
    x.spec_ = std::move(p);
    return x;
  }

  std::size_t size() const { return spec_.size(); }
  const std::vector<std::string>& points() const { return spec_.labels(); }
  const std::string& point(std::size_t i) const { return spec_.label(i); }
  const FinPoset& specialization() const { return spec_; }

  // x specializes to y: y lies in the closure of {x}.
  bool specializes(std::size_t x, std::size_t y) const { return spec_.leq(y, x); }

  // Frame of open subsets, ordered by inclusion.
  DistLattice opens(std::size_t cap = kDefaultLatticeCap) const {
    return alexandroff_opens(spec_, cap);
  }

  // Closed points are the minimal ones; generic points the maximal.
  std::vector<std::size_t> closed_points() const { return spec_.minimal_elements(); }

 private:
  FinPoset spec_;
};

// Spectrum of a lattice. Points are the prime filters; every prime
// filter of a finite distributive lattice is generated by a unique
// join-irreducible element, so points are labelled by those generators
// and ordered opposite to them (p lies in the closure of {q} exactly
// when the generator of q sits below the generator of p). The open
// sets then recover the lattice itself.
inline SpectralSpace spec(const DistLattice& l) {
  return SpectralSpace::from_specialization(join_irreducibles(l).reversed());
}

// Spectrum of the order-reversed lattice.
inline SpectralSpace spc(const DistLattice& l) { return spec(opposite(l)); }

inline SpectralSpace space_product(const SpectralSpace& x, const SpectralSpace& y) {
  return SpectralSpace::from_specialization(product(x.specialization(), y.specialization()));
}

inline SpectralSpace discrete_space(const std::vector<std::string>& points) {
  return SpectralSpace::from_specialization(FinPoset::antichain(points));
}

inline SpectralSpace singleton_space(const std::string& name = "pt") {
  return discrete_space({name});
}

// Sierpinski space: closed point s0 below generic point s1.
inline SpectralSpace sierpinski() {
  return SpectralSpace::from_specialization(FinPoset::chain(2, "s"));
}

// Constructible (patch) topology: on a finite space it is discrete,
// keeping the same points.
inline SpectralSpace constructible(const SpectralSpace& x) {
  return discrete_space(x.points());
}

// Specialization order: p <= q exactly when p lies in the closure of
// {q}, so the open sets are its up-closed subsets.
inline const FinPoset& specialization_poset(const SpectralSpace& x) { return x.specialization(); }

// Continuous map spec(M) -> spec(L) induced by a lattice morphism
// f: L -> M, as a point map. A point of M is a prime filter; its
// preimage under f is a prime filter of L, and the point index returned
// is that of its join-irreducible generator. Preimages of basic opens
// satisfy preimage(D(a)) = D(f(a)).
inline std::vector<std::size_t> spec_map(const DLatMorphism& f) {
  const DistLattice& l = *f.source;
  const DistLattice& m = *f.target;
  const std::size_t kl = l.ground().size();
  std::vector<std::size_t> out(m.ground().size());
  for (std::size_t gy = 0; gy < m.ground().size(); ++gy) {
    const std::size_t y = m.ji_element(gy);
    Bitset acc = Bitset::full(kl);
    for (std::size_t a = 0; a < l.size(); ++a)
      if (m.leq(y, f.map[a])) acc &= l.mask(a);
    const std::size_t gen = l.element_of_mask(acc);  // meet of the pulled-back filter
    if (!l.is_ji(gen)) throw Error("pulled-back filter is not prime at point " + m.label(y));
    for (std::size_t g = 0; g < kl; ++g)
      if (l.ji_element(g) == gen) out[gy] = g;
  }
  return out;
}

// Searches for a homeomorphism; for finite spaces this is exactly an
// isomorphism of specialization orders. The search is exhaustive, so a
// size guard protects against accidental blow-ups; raise it explicitly
// for larger spaces.
inline std::optional<std::vector<int>> homeomorphism(const SpectralSpace& x,
                                                     const SpectralSpace& y,
                                                     std::size_t guard = kDefaultHomeoGuard) {
  if (x.size() != y.size()) return std::nullopt;
  if (x.size() > guard)
    throw SizeGuard("homeomorphism search on " + std::to_string(x.size()) +
                    " points exceeds guard " + std::to_string(guard) +
                    "; pass a larger guard to allow it");
  return poset_isomorphism(x.specialization(), y.specialization());
}

inline bool homeomorphic(const SpectralSpace& x, const SpectralSpace& y,
                         std::size_t guard = kDefaultHomeoGuard) {
  return homeomorphism(x, y, guard).has_value();
}

}  // namespace spclat
