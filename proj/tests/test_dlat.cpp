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

#include <catch2/catch_amalgamated.hpp>

#include "spclat/dlat.hpp"
#include "spclat/poset.hpp"
#include "spclat/semilattice.hpp"

using namespace spclat;

namespace {

bool same_lattice(const DistLattice& a, const DistLattice& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.label(i) != b.label(i)) return false;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.leq(i, j) != b.leq(i, j)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("downset lattices of small posets") {
  DistLattice c = from_downsets(FinPoset::chain(2, "c"));
  CHECK(c.size() == 3);
  CHECK(c.label(c.bottom()) == "{}");
  CHECK(c.label(c.top()) == "{c0,c1}");
  CHECK_FALSE(c.boolean());

  DistLattice d = from_downsets(FinPoset::antichain({"a", "b"}));
  CHECK(d.size() == 4);
  CHECK(d.boolean());
  CHECK(d.join(d.bottom(), d.top()) == d.top());
  CHECK(d.meet(d.bottom(), d.top()) == d.bottom());

  CHECK(DistLattice::trivial().size() == 1);
  CHECK(from_downsets(FinPoset::antichain({})).size() == 1);
}

TEST_CASE("explicit order data is validated and labels survive") {
  DistLattice d = DistLattice::from_relation(
      {"bot", "x", "y", "top"},
      {{"bot", "x"}, {"bot", "y"}, {"x", "top"}, {"y", "top"}});
  CHECK(d.size() == 4);
  CHECK(d.boolean());
  CHECK(d.label(d.bottom()) == "bot");
  CHECK(d.label(d.top()) == "top");
  // Join-irreducibles are x and y.
  CHECK(d.ground().size() == 2);

  // The five-element modular non-distributive lattice is rejected.
  CHECK_THROWS_AS(DistLattice::from_relation(
                      {"0", "a", "b", "c", "1"},
                      {{"0", "a"}, {"0", "b"}, {"0", "c"},
                       {"a", "1"}, {"b", "1"}, {"c", "1"}}),
                  InvalidInput);
  // The pentagon is rejected too.
  CHECK_THROWS_AS(DistLattice::from_relation(
                      {"0", "a", "b", "c", "1"},
                      {{"0", "a"}, {"a", "c"}, {"c", "1"}, {"0", "b"}, {"b", "1"}}),
                  InvalidInput);
  // A poset without joins is not a lattice.
  CHECK_THROWS_AS(
      DistLattice::from_relation({"a", "b"}, {}),
      InvalidInput);
}

TEST_CASE("join irreducibles invert the downset construction") {
  for (const FinPoset& p :
       {FinPoset::chain(3, "c"), FinPoset::antichain({"a", "b"}),
        FinPoset::validate({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}})}) {
    DistLattice l = from_downsets(p);
    FinPoset ji = join_irreducibles(l);
    CHECK(poset_isomorphism(ji, p).has_value());
    // The recovered labels are the principal-downset labels.
    for (std::size_t g = 0; g < ji.size(); ++g)
      CHECK(ji.label(g) == l.label(l.ji_element(g)));
  }
}

TEST_CASE("is_ji marks exactly the irreducible elements") {
  DistLattice l = from_downsets(
      FinPoset::validate({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}}));
  std::size_t count = 0;
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l.is_ji(i)) ++count;
  CHECK(count == l.ground().size());
  CHECK_FALSE(l.is_ji(l.bottom()));
  for (std::size_t g = 0; g < l.ground().size(); ++g)
    CHECK(l.is_ji(l.ji_element(g)));
}

TEST_CASE("free distributive lattice on a semilattice") {
  UpperSemilattice u = UpperSemilattice::from_poset(FinPoset::chain(2, "u"));
  FreeResult f = free_dlat(u);
  CHECK(f.lattice.size() == 3);  // the 3-chain
  CHECK(f.unit[0] == f.lattice.bottom());
  CHECK(f.unit[1] != f.lattice.bottom());
  CHECK(f.unit[1] != f.lattice.top());
  // The unit is a join/bottom-preserving map.
  for (std::size_t a = 0; a < u.size(); ++a)
    for (std::size_t b = 0; b < u.size(); ++b)
      CHECK(f.unit[u.join(a, b)] == f.lattice.join(f.unit[a], f.unit[b]));
}

TEST_CASE("booleanization is the power set of the irreducibles") {
  DistLattice c3 = from_downsets(FinPoset::chain(2, "c"));
  BooleanizeResult b = booleanize(c3);
  CHECK(b.lattice.size() == 4);
  CHECK(b.lattice.boolean());
  CHECK(b.unit[c3.bottom()] == b.lattice.bottom());
  CHECK(b.unit[c3.top()] == b.lattice.top());
  CHECK_NOTHROW(make_dlat_morphism(c3, b.lattice, b.unit));

  // On a Boolean algebra the unit is an isomorphism (a bijection).
  DistLattice d = from_downsets(FinPoset::antichain({"a", "b"}));
  BooleanizeResult bd = booleanize(d);
  std::vector<char> hit(bd.lattice.size(), 0);
  for (std::size_t v : bd.unit) hit[v] = 1;
  CHECK(bd.lattice.size() == d.size());
  for (char h : hit) CHECK(h == 1);

  CHECK(booleanize(DistLattice::trivial()).lattice.size() == 1);
}

TEST_CASE("opposite lattice is an involution") {
  for (const FinPoset& p :
       {FinPoset::chain(3, "c"), FinPoset::validate({"0", "a", "b"},
                                                    {{"0", "a"}, {"0", "b"}})}) {
    DistLattice l = from_downsets(p);
    DistLattice op = opposite(l);
    CHECK(op.size() == l.size());
    // Order reverses: bottom and top swap labels.
    CHECK(op.label(op.bottom()) == l.label(l.top()));
    CHECK(op.label(op.top()) == l.label(l.bottom()));
    CHECK(same_lattice(opposite(op), l));
  }
  // Self-dual example: the 3-chain.
  DistLattice c3 = from_downsets(FinPoset::chain(2, "c"));
  CHECK(opposite(c3).size() == 3);
}

TEST_CASE("morphism validation and composition") {
  DistLattice c3 = from_downsets(FinPoset::chain(2, "c"));
  DistLattice c2 = from_downsets(FinPoset::chain(1, "c"));
  // Collapse the middle downward: a valid morphism.
  DLatMorphism f = make_dlat_morphism(c3, c2, {0, 0, 1});
  DLatMorphism g = make_dlat_morphism(c2, c3, {0, 2});
  DLatMorphism gf = compose(f, g);
  CHECK(gf.map == std::vector<std::size_t>{0, 0, 2});

  // Sending the middle to the top breaks nothing; bad bottom does.
  CHECK_NOTHROW(make_dlat_morphism(c3, c2, {0, 1, 1}));
  CHECK_THROWS_AS(make_dlat_morphism(c3, c2, {1, 1, 1}), InvalidInput);
  // Meet violation: diamond atoms both to the same chain middle.
  DistLattice d = from_downsets(FinPoset::antichain({"a", "b"}));
  CHECK_THROWS_AS(make_dlat_morphism(d, c3, {0, 1, 1, 1}), InvalidInput);
  CHECK_NOTHROW(make_dlat_morphism(d, c3, {0, 0, 2, 2}));
}

TEST_CASE("tensor is the coproduct pairing grounds") {
  DistLattice c3 = from_downsets(FinPoset::chain(2, "c"));
  DistLattice c2 = from_downsets(FinPoset::chain(1, "d"));

  TensorResult t = tensor(c3, c3);
  CHECK(t.lattice.ground().size() == 4);  // 2-chain x 2-chain
  CHECK(t.lattice.size() == 6);           // downsets of the 2x2 grid
  CHECK_NOTHROW(make_dlat_morphism(c3, t.lattice, t.inj_left));
  CHECK_NOTHROW(make_dlat_morphism(c3, t.lattice, t.inj_right));
  CHECK(t.inj_left[c3.top()] == t.lattice.top());
  CHECK(t.inj_left[c3.bottom()] == t.lattice.bottom());

  // The 2-chain is the unit: tensoring with it changes nothing.
  TensorResult unit = tensor(c3, c2);
  CHECK(unit.lattice.size() == c3.size());
  CHECK(poset_isomorphism(unit.lattice.ground(), c3.ground()).has_value());

  // Tensoring with the trivial lattice collapses everything.
  CHECK(tensor(c3, DistLattice::trivial()).lattice.size() == 1);
}

TEST_CASE("power lattice with named copies") {
  DistLattice c2 = from_downsets(FinPoset::chain(1, "c"));
  PowerResult p = power(c2, {"a", "b"});
  CHECK(p.lattice.size() == 4);
  CHECK(p.lattice.boolean());

  // Component round trip.
  std::size_t e = p.from_components(c2, {c2.top(), c2.bottom()});
  CHECK(p.component(c2, e, 0) == c2.top());
  CHECK(p.component(c2, e, 1) == c2.bottom());
  CHECK_THROWS_AS(p.from_components(c2, {c2.top()}), InvalidInput);
  CHECK_THROWS_AS(p.from_components(c2, {7, 0}), InvalidInput);

  // The empty power is the terminal lattice.
  CHECK(power(c2, {}).lattice.size() == 1);
  // Powers of the trivial lattice stay trivial.
  CHECK(power(DistLattice::trivial(), {"a", "b"}).lattice.size() == 1);
}

TEST_CASE("capacity and size guards fire") {
  CHECK_THROWS_AS(from_downsets(FinPoset::antichain(
                      {"a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k",
                       "l", "m", "n", "o", "p", "q"})),
                  CapacityExceeded);

  std::vector<std::string> labels;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < 600; ++i) labels.push_back("e" + std::to_string(i));
  for (int i = 0; i + 1 < 600; ++i) pairs.emplace_back(labels[i], labels[i + 1]);
  CHECK_THROWS_AS(DistLattice::from_relation(labels, pairs), SizeGuard);
}
