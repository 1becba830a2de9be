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

#include "spclat/oag.hpp"
#include "spclat/poset.hpp"

using namespace spclat;

namespace {

OrderedAbelianGroup make_z() {
  return OrderedAbelianGroup(1, {}, {GroupElement{1}});
}
OrderedAbelianGroup make_z23() {
  return OrderedAbelianGroup(1, {}, {GroupElement{2}, GroupElement{3}});
}
OrderedAbelianGroup make_z_discrete() {
  return OrderedAbelianGroup(1, {}, {});
}
OrderedAbelianGroup make_zz() {
  return OrderedAbelianGroup(2, {}, {GroupElement{1, 0}, GroupElement{0, 1}});
}
OrderedAbelianGroup make_zz2() {
  return OrderedAbelianGroup(1, {2}, {GroupElement{1, 0}, GroupElement{1, 1}});
}

// Recompute a Yes-certificate: the coefficients must combine the
// generators back into the queried element.
void check_witness(const OrderedAbelianGroup& g, const GroupElement& x,
                   const ConeDecision& d) {
  REQUIRE(d.decision == Decision::Yes);
  REQUIRE(d.coefficients.size() == g.cone_generators().size());
  GroupElement acc = g.zero();
  for (std::size_t i = 0; i < d.coefficients.size(); ++i) {
    REQUIRE(d.coefficients[i] >= 0);
    acc = g.add(acc, g.scale(d.coefficients[i], g.cone_generators()[i]));
  }
  CHECK(g.equal(acc, x));
}

}  // namespace

TEST_CASE("cone membership with certificates") {
  OrderedAbelianGroup z = make_z();
  check_witness(z, {5}, z.cone_member({5}));
  CHECK(z.cone_member({0}).decision == Decision::Yes);
  CHECK(z.cone_member({-1}).decision == Decision::No);

  OrderedAbelianGroup z23 = make_z23();
  CHECK(z23.cone_member({1}).decision == Decision::No);
  check_witness(z23, {7}, z23.cone_member({7}));
  for (long long v : {2, 3, 4, 5, 6, 8, 9, 10})
    CHECK(z23.cone_member({v}).decision == Decision::Yes);

  OrderedAbelianGroup disc = make_z_discrete();
  CHECK(disc.cone_member({0}).decision == Decision::Yes);
  CHECK(disc.cone_member({1}).decision == Decision::No);
  CHECK(disc.cone_member({-1}).decision == Decision::No);

  OrderedAbelianGroup zz = make_zz();
  check_witness(zz, {3, 4}, zz.cone_member({3, 4}));
  CHECK(zz.cone_member({1, -1}).decision == Decision::No);

  OrderedAbelianGroup zz2 = make_zz2();
  check_witness(zz2, {1, 1}, zz2.cone_member({1, 1}));
  check_witness(zz2, {2, 0}, zz2.cone_member({2, 0}));
  CHECK(zz2.cone_member({0, 1}).decision == Decision::No);
}

TEST_CASE("construction rejects bad data and unpointed cones") {
  CHECK_THROWS_AS(OrderedAbelianGroup(1, {1}, {}), InvalidInput);
  CHECK_THROWS_AS(OrderedAbelianGroup(1, {}, {GroupElement{1, 2}}), InvalidInput);
  // 1 and -1 cancel, so the cone contains a line.
  CHECK_THROWS_AS(OrderedAbelianGroup(1, {}, {GroupElement{1}, GroupElement{-1}}),
                  InvalidInput);
  // A pointed cone whose pointedness has no bounded certificate is
  // reported honestly rather than guessed.
  CHECK_THROWS_AS(OrderedAbelianGroup(2, {}, {GroupElement{1, -1}, GroupElement{-1, 2}}),
                  Inconclusive);
}

TEST_CASE("order comparisons are translation invariant") {
  OrderedAbelianGroup z23 = make_z23();
  CHECK(z23.leq({0}, {2}).decision == Decision::Yes);
  CHECK(z23.leq({0}, {1}).decision == Decision::No);
  for (long long t : {-4, 0, 9}) {
    CHECK(z23.leq({0 + t}, {2 + t}).decision == Decision::Yes);
    CHECK(z23.leq({0 + t}, {1 + t}).decision == Decision::No);
  }
}

TEST_CASE("principal ideal comparisons") {
  OrderedAbelianGroup z = make_z();
  PrincipalDecision d = z.principal_leq({2}, {3});
  CHECK(d.decision == Decision::Yes);
  CHECK(d.multiple >= 1);

  // Both sides must be cone elements.
  CHECK_THROWS_AS(z.principal_leq({-1}, {1}), NotInCone);
  CHECK_THROWS_AS(z.principal_leq({1}, {-1}), NotInCone);

  // Nothing positive divides into zero; the multiples of zero are a
  // finite (single-element) set, so the answer is a certified No.
  CHECK(z.principal_leq({1}, {0}).decision == Decision::No);
  CHECK(z.principal_leq({0}, {0}).decision == Decision::Yes);

  // Too small a bound ends in an honest Inconclusive, not a wrong No.
  CHECK(z.principal_leq({20}, {1}, 4).decision == Decision::Inconclusive);
  CHECK(z.principal_leq({20}, {1}, 32).decision == Decision::Yes);

  // Separating-coordinate No: nothing with positive second coordinate
  // sits under multiples of a generator with none.
  OrderedAbelianGroup zz = make_zz();
  CHECK(zz.principal_leq({0, 1}, {1, 0}).decision == Decision::No);
  CHECK(zz.principal_leq({1, 1}, {1, 1}).decision == Decision::Yes);

  // Torsion is absorbed: (1,0) and (1,1) dominate each other.
  OrderedAbelianGroup zz2 = make_zz2();
  CHECK(zz2.principal_leq({1, 0}, {1, 1}).decision == Decision::Yes);
  CHECK(zz2.principal_leq({1, 1}, {1, 0}).decision == Decision::Yes);
}

TEST_CASE("bounded join search") {
  OrderedAbelianGroup z = make_z();
  JoinOutcome j = z.try_join({2}, {3});
  REQUIRE(j.kind == JoinOutcome::Kind::Found);
  CHECK(j.join == GroupElement{3});

  // With cone generated by 2 and 3 there are two incomparable minimal
  // upper bounds of 2 and 3, namely 5 and 6.
  OrderedAbelianGroup z23 = make_z23();
  JoinOutcome nu = z23.try_join({2}, {3});
  REQUIRE(nu.kind == JoinOutcome::Kind::NotUnique);
  CHECK(nu.minimal_upper_bounds ==
        std::vector<GroupElement>{GroupElement{5}, GroupElement{6}});

  // In the discrete order distinct elements have no common upper bound.
  OrderedAbelianGroup disc = make_z_discrete();
  CHECK(disc.try_join({0}, {1}).kind == JoinOutcome::Kind::NotFound);

  OrderedAbelianGroup zz = make_zz();
  JoinOutcome jz = zz.try_join({1, 0}, {0, 1});
  REQUIRE(jz.kind == JoinOutcome::Kind::Found);
  CHECK(jz.join == GroupElement{1, 1});

  // An oversized search box is refused, not silently truncated.
  CHECK_THROWS_AS(zz.try_join({0, 0}, {1, 1}, 1000), SizeGuard);
}

TEST_CASE("identity component of the cone") {
  // 2 and 3 generate all of Z.
  SubgroupResult s = make_z23().identity_component();
  CHECK(s.group.free_rank() == 1);
  CHECK(s.group.torsion_orders().empty());
  auto e = s.presentation.express({1});
  REQUIRE(e.has_value());
  CHECK(s.presentation.embed(*e) == GroupElement{1});

  // An empty cone generates the zero subgroup.
  SubgroupResult zd = make_z_discrete().identity_component();
  CHECK(zd.group.free_rank() == 0);
  CHECK(zd.group.torsion_orders().empty());
  CHECK_FALSE(zd.presentation.express({1}).has_value());

  // (1,0) and (1,1) generate all of Z x Z/2.
  SubgroupResult s2 = make_zz2().identity_component();
  CHECK(s2.group.free_rank() == 1);
  CHECK(s2.group.torsion_orders() == std::vector<long long>{2});
  for (GroupElement x : {GroupElement{0, 1}, GroupElement{3, 1}, GroupElement{-2, 0}}) {
    auto coords = s2.presentation.express(x);
    REQUIRE(coords.has_value());
    CHECK(s2.presentation.embed(*coords) == x);
  }
}

TEST_CASE("archimedean classes over a window") {
  // All positive integers are one class.
  ArchSemilattice a = arch(make_z(), {GroupElement{1}, GroupElement{2}});
  CHECK(a.semilattice.size() == 2);
  CHECK(a.classes[0] == GroupElement{0});
  CHECK(poset_isomorphism(a.semilattice.poset(), FinPoset::chain(2)).has_value());

  // 2 and 3 dominate each other even in the coarse cone.
  ArchSemilattice a23 = arch(make_z23(), {GroupElement{2}, GroupElement{3}});
  CHECK(a23.semilattice.size() == 2);

  // Torsion folds into the free part.
  ArchSemilattice a2 = arch(make_zz2(), {GroupElement{1, 0}, GroupElement{1, 1}});
  CHECK(a2.semilattice.size() == 2);

  // The two axes of Z^2 are incomparable; their sum dominates both.
  ArchSemilattice ap = arch(make_zz(), {GroupElement{1, 0}, GroupElement{0, 1}});
  CHECK(ap.semilattice.size() == 4);
  FinPoset diamond = FinPoset::validate(
      {"0", "a", "b", "t"}, {{"0", "a"}, {"0", "b"}, {"a", "t"}, {"b", "t"}});
  CHECK(poset_isomorphism(ap.semilattice.poset(), diamond).has_value());

  // Degenerate and guarded inputs.
  CHECK(arch(make_z(), {}).semilattice.size() == 1);
  CHECK_THROWS_AS(arch(make_z(), {GroupElement{-1}}), NotInCone);
  std::vector<GroupElement> wide(13, GroupElement{1});
  CHECK_THROWS_AS(arch(make_z(), wide), SizeGuard);
}
