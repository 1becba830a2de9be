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

// Graphviz DOT emitters.  Posets and semilattices are drawn as Hasse
// diagrams (cover edges only, drawn bottom-up); spectral spaces are drawn
// with specialization arrows between covers and a comment carrying the
// open-set count.  Node order follows element order, so output is
// deterministic.

#include <cstddef>
#include <string>
#include <vector>

#include "spclat/dlat.hpp"
#include "spclat/poset.hpp"
#include "spclat/semilattice.hpp"
#include "spclat/spectral.hpp"

namespace spclat {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

inline std::string dot_digraph(const std::string& name, const FinPoset& p,
                               const std::string& preamble) {
  std::string out = "digraph " + name + " {\n";
  out += "  rankdir=BT;\n";
  out += preamble;
  for (std::size_t i = 0; i < p.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=" + dot_quote(p.label(i)) + "];\n";
  for (const auto& [a, b] : p.cover_pairs())
    out += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
  return out + "}\n";
}

}  // namespace detail

inline std::string poset_to_dot(const FinPoset& p, const std::string& name = "poset") {
  return detail::dot_digraph(name, p, "");
}

inline std::string semilattice_to_dot(const UpperSemilattice& s,
                                      const std::string& name = "semilattice") {
  return detail::dot_digraph(name, s.poset(), "");
}

/// Hasse diagram of the lattice's element order.
inline std::string lattice_to_dot(const DistLattice& l,
                                  const std::string& name = "lattice") {
  return detail::dot_digraph(name, l.element_poset(), "");
}

/// Specialization diagram of a finite spectral space; the comment line
/// records how many open sets the space has.
inline std::string space_to_dot(const SpectralSpace& x,
                                const std::string& name = "space") {
  const std::string preamble =
      "  // points: " + std::to_string(x.size()) +
      ", opens: " + std::to_string(x.opens().size()) + "\n";
  return detail::dot_digraph(name, x.specialization(), preamble);
}

}  // namespace spclat
