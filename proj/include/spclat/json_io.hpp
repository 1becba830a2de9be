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

// JSON serialization for the core value types.  Schemas:
//   poset    {"elements": ["a","b"], "leq": [["a","b"]]}
//   lattice  {"downsets_of": <poset>}  or  {"elements": [...], "leq": [...]}
//   group    {"free_rank": 1, "torsion": [2], "cone": [[1,0]], "bound": 16}
//   space    {"points": ["x"], "opens": [[], ["x"]]}
//   report   {"name": ..., "instances_checked": ..., "instances_skipped":
//             ..., "passed": ..., "counterexample": ...}
// Emission is deterministic and re-parses to an equal value: posets emit
// their cover pairs, lattices emit the explicit form while it fits the
// input guard (preserving element labels) and the downsets_of form above
// it, spaces emit every open in canonical order.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "spclat/dlat.hpp"
#include "spclat/error.hpp"
#include "spclat/oag.hpp"
#include "spclat/oracle.hpp"
#include "spclat/poset.hpp"
#include "spclat/semilattice.hpp"
#include "spclat/spectral.hpp"

namespace spclat {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw InvalidInput(what + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline std::vector<std::pair<std::string, std::string>> pair_list(
    const Json& j, const std::string& what) {
  if (!j.is_array()) throw InvalidInput(what + " must be an array of label pairs");
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw InvalidInput(what + " entries must be two-element label arrays");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

}  // namespace detail

// --- Posets -----------------------------------------------------------

inline FinPoset poset_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("elements") || !j.contains("leq"))
    throw InvalidInput("poset JSON needs \"elements\" and \"leq\"");
  return FinPoset::validate(detail::string_list(j["elements"], "\"elements\""),
                            detail::pair_list(j["leq"], "\"leq\""));
}

inline Json poset_to_json(const FinPoset& p) {
  Json j;
  j["elements"] = p.labels();
  Json leq = Json::array();
  for (const auto& [a, b] : p.cover_pairs())
    leq.push_back(Json::array({p.label(a), p.label(b)}));
  j["leq"] = std::move(leq);
  return j;
}

// --- Lattices ---------------------------------------------------------

inline DistLattice lattice_from_json(const Json& j,
                                     std::size_t cap = kDefaultLatticeCap) {
  if (!j.is_object()) throw InvalidInput("lattice JSON must be an object");
  if (j.contains("downsets_of"))
    return from_downsets(poset_from_json(j["downsets_of"]), cap);
  if (j.contains("elements") && j.contains("leq"))
    return DistLattice::from_relation(
        detail::string_list(j["elements"], "\"elements\""),
        detail::pair_list(j["leq"], "\"leq\""));
  throw InvalidInput("lattice JSON needs \"downsets_of\" or \"elements\"/\"leq\"");
}

inline Json lattice_to_json(const DistLattice& l) {
  if (l.size() <= kDefaultInputGuard) {
    Json j;
    Json elements = Json::array();
    for (std::size_t i = 0; i < l.size(); ++i) elements.push_back(l.label(i));
    j["elements"] = std::move(elements);
    Json leq = Json::array();
    for (const auto& [a, b] : l.element_poset().cover_pairs())
      leq.push_back(Json::array({l.label(a), l.label(b)}));
    j["leq"] = std::move(leq);
    return j;
  }
  Json j;
  j["downsets_of"] = poset_to_json(l.ground());
  return j;
}

// --- Morphisms (label maps) --------------------------------------------

inline Json morphism_to_json(const DLatMorphism& f) {
  Json j = Json::object();
  for (std::size_t i = 0; i < f.map.size(); ++i)
    j[f.source->label(i)] = f.target->label(f.map[i]);
  return j;
}

// --- Ordered abelian groups --------------------------------------------

inline OrderedAbelianGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("free_rank") || !j.contains("cone"))
    throw InvalidInput("group JSON needs \"free_rank\" and \"cone\"");
  if (!j["free_rank"].is_number_unsigned())
    throw InvalidInput("\"free_rank\" must be a nonnegative integer");
  const std::size_t free_rank = j["free_rank"].get<std::size_t>();
  std::vector<long long> torsion;
  if (j.contains("torsion")) {
    if (!j["torsion"].is_array()) throw InvalidInput("\"torsion\" must be an array");
    for (const auto& t : j["torsion"]) {
      if (!t.is_number_integer() || t.get<long long>() < 2)
        throw InvalidInput("torsion orders must be integers >= 2");
      torsion.push_back(t.get<long long>());
    }
  }
  const std::size_t dim = free_rank + torsion.size();
  if (!j["cone"].is_array()) throw InvalidInput("\"cone\" must be an array of vectors");
  std::vector<GroupElement> cone;
  for (const auto& g : j["cone"]) {
    if (!g.is_array() || g.size() != dim)
      throw InvalidInput("cone generators must be vectors of length " +
                         std::to_string(dim));
    GroupElement e;
    for (const auto& c : g) {
      if (!c.is_number_integer()) throw InvalidInput("cone coordinates must be integers");
      e.push_back(c.get<long long>());
    }
    cone.push_back(std::move(e));
  }
  std::size_t bound = kDefaultSearchBound;
  if (j.contains("bound")) {
    if (!j["bound"].is_number_unsigned() || j["bound"].get<std::size_t>() == 0)
      throw InvalidInput("\"bound\" must be a positive integer");
    bound = j["bound"].get<std::size_t>();
  }
  return OrderedAbelianGroup(free_rank, std::move(torsion), std::move(cone), bound);
}

inline Json group_to_json(const OrderedAbelianGroup& g) {
  Json j;
  j["free_rank"] = g.free_rank();
  j["torsion"] = g.torsion_orders();
  Json cone = Json::array();
  for (const auto& e : g.cone_generators()) cone.push_back(e);
  j["cone"] = std::move(cone);
  j["bound"] = g.default_bound();
  return j;
}

/// Parses a list of group elements such as "[1]" (rank-one shorthand,
/// plain integers) or "[[1,0],[0,1]]" (coordinate vectors).
inline std::vector<GroupElement> elements_from_json(const Json& j,
                                                    const OrderedAbelianGroup& g) {
  if (!j.is_array()) throw InvalidInput("element list must be a JSON array");
  const std::size_t dim = g.dim();
  std::vector<GroupElement> out;
  for (const auto& e : j) {
    if (e.is_number_integer()) {
      if (dim != 1)
        throw InvalidInput("plain integers only describe elements of rank-one groups");
      out.push_back(GroupElement{e.get<long long>()});
      continue;
    }
    if (!e.is_array() || e.size() != dim)
      throw InvalidInput("elements must be vectors of length " + std::to_string(dim));
    GroupElement v;
    for (const auto& c : e) {
      if (!c.is_number_integer()) throw InvalidInput("coordinates must be integers");
      v.push_back(c.get<long long>());
    }
    out.push_back(std::move(v));
  }
  return out;
}

// --- Spectral spaces ----------------------------------------------------

inline SpectralSpace space_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
    throw InvalidInput("space JSON needs \"points\" and \"opens\"");
  const std::vector<std::string> points = detail::string_list(j["points"], "\"points\"");
  const std::size_t n = points.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = i + 1; k < n; ++k)
      if (points[i] == points[k])
        throw InvalidInput("duplicate point label " + points[i]);
  if (!j["opens"].is_array()) throw InvalidInput("\"opens\" must be an array of arrays");
  std::vector<Bitset> opens;
  for (const auto& o : j["opens"]) {
    Bitset mask(n);
    for (const auto& pt : detail::string_list(o, "open set")) {
      bool found = false;
      for (std::size_t i = 0; i < n && !found; ++i)
        if (points[i] == pt) {
          mask.set(i);
          found = true;
        }
      if (!found) throw InvalidInput("open set mentions unknown point " + pt);
    }
    opens.push_back(std::move(mask));
  }
  // Specialization order: x <= y when every open containing x contains y
  // (opens are up-closed).  T0 failures surface as order cycles.
  std::vector<Bitset> rows;
  rows.reserve(n);
  for (std::size_t x = 0; x < n; ++x) {
    Bitset row = Bitset::full(n);
    for (const Bitset& o : opens)
      if (o.test(x)) row &= o;
    row.set(x);
    rows.push_back(std::move(row));
  }
  FinPoset spec;
  try {
    spec = FinPoset::from_rows(points, std::move(rows));
  } catch (const CycleDetected&) {
    throw InvalidInput("space is not T0: two points lie in the same opens");
  }
  // The opens must be exactly the up-closed sets of that order.
  DistLattice expected = alexandroff_opens(spec);
  std::vector<Bitset> sorted = opens;
  std::sort(sorted.begin(), sorted.end(), Bitset::canonical_less);
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  bool match = sorted.size() == expected.size();
  for (std::size_t i = 0; match && i < sorted.size(); ++i)
    if (sorted[i] != expected.mask(i)) match = false;
  if (!match)
    throw InvalidInput("opens are not exactly the up-closed sets of the "
                       "specialization order (not a finite spectral space)");
  return SpectralSpace::from_specialization(std::move(spec));
}

inline Json space_to_json(const SpectralSpace& x) {
  Json j;
  j["points"] = x.specialization().labels();
  DistLattice opens = x.opens();
  Json open_list = Json::array();
  for (std::size_t i = 0; i < opens.size(); ++i) {
    Json one = Json::array();
    opens.mask(i).for_each([&](std::size_t p) { one.push_back(x.point(p)); });
    open_list.push_back(std::move(one));
  }
  j["opens"] = std::move(open_list);
  return j;
}

// --- Check reports ------------------------------------------------------

inline Json report_to_json(const CheckReport& r) {
  Json j;
  j["name"] = r.name;
  j["instances_checked"] = r.instances_checked;
  j["instances_skipped"] = r.instances_skipped;
  j["passed"] = r.passed();
  j["counterexample"] = r.counterexample ? Json(*r.counterexample) : Json(nullptr);
  return j;
}

}  // namespace spclat
