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
#include "spclat/oracle.hpp"
#include "spclat/poset.hpp"
#include "spclat/spectral.hpp"

using namespace spclat;

TEST_CASE("spectra of the smallest lattices") {
  DistLattice c3 = from_downsets(FinPoset::chain(2, "c"));
  SpectralSpace s = spec(c3);
  CHECK(s.size() == 2);
  CHECK(s.opens().size() == 3);
  CHECK(s.closed_points().size() == 1);

  DistLattice c2 = from_downsets(FinPoset::chain(1, "c"));
  CHECK(spec(c2).size() == 1);
  CHECK(spec(DistLattice::trivial()).size() == 0);

  // The diamond has two incomparable points.
  DistLattice d = from_downsets(FinPoset::antichain({"a", "b"}));
  SpectralSpace sd = spec(d);
  CHECK(sd.size() == 2);
  CHECK(sd.opens().size() == 4);
  CHECK(sd.closed_points().size() == 2);
}

TEST_CASE("open sets recover the lattice") {
  for (const FinPoset& p :
       {FinPoset::chain(3, "c"), FinPoset::antichain({"a", "b"}),
        FinPoset::validate({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}})}) {
    DistLattice l = from_downsets(p);
    CHECK(find_isomorphism(spec(l).opens(), l).has_value());
  }
}

TEST_CASE("specialization goes from generic to closed") {
  SpectralSpace s = sierpinski();
  CHECK(s.size() == 2);
  CHECK(s.point(0) == "s0");
  // The generic point specializes to the closed one, not back.
  CHECK(s.specializes(1, 0));
  CHECK_FALSE(s.specializes(0, 1));
  CHECK(s.closed_points() == std::vector<std::size_t>{0});
  CHECK(s.opens().size() == 3);
  CHECK(homeomorphic(spec(from_downsets(FinPoset::chain(2, "c"))), s));
}

TEST_CASE("products and discrete spaces") {
  SpectralSpace s2 = space_product(sierpinski(), sierpinski());
  CHECK(s2.size() == 4);
  CHECK(s2.opens().size() == 6);

  SpectralSpace d = discrete_space({"x", "y", "z"});
  CHECK(d.size() == 3);
  CHECK(d.opens().size() == 8);
  CHECK(d.closed_points().size() == 3);
  CHECK(singleton_space().size() == 1);

  // Empty product of spaces degenerates to the given factor.
  SpectralSpace none = discrete_space({});
  CHECK(space_product(none, sierpinski()).size() == 0);
}

TEST_CASE("constructible topology is discrete on the same points") {
  SpectralSpace s2 = space_product(sierpinski(), sierpinski());
  SpectralSpace c = constructible(s2);
  CHECK(c.size() == 4);
  CHECK(c.points() == s2.points());
  CHECK(c.opens().size() == 16);
}

TEST_CASE("spc is the spectrum of the reversed lattice") {
  DistLattice c3 = from_downsets(FinPoset::chain(2, "c"));
  CHECK(homeomorphic(spc(c3), spec(c3)));  // chains are self-dual
  DistLattice d = from_downsets(FinPoset::antichain({"a", "b"}));
  CHECK(spc(d).size() == 2);
  CHECK(spc(DistLattice::trivial()).size() == 0);
}

TEST_CASE("homeomorphism search and its guard") {
  CHECK(homeomorphic(sierpinski(), sierpinski()));
  CHECK_FALSE(homeomorphic(sierpinski(), discrete_space({"x", "y"})));
  // Size mismatch is decided without touching the guard.
  std::vector<std::string> many;
  for (int i = 0; i < 13; ++i) many.push_back("p" + std::to_string(i));
  SpectralSpace big = discrete_space(many);
  CHECK_FALSE(homeomorphic(big, sierpinski()));
  // Equal oversized spaces trip the guard unless it is raised.
  CHECK_THROWS_AS(homeomorphic(big, big), SizeGuard);
  CHECK(homeomorphic(big, big, 13));
}

TEST_CASE("lattice morphisms induce point maps") {
  DistLattice c3 = from_downsets(FinPoset::chain(2, "c"));
  DistLattice c2 = from_downsets(FinPoset::chain(1, "d"));
  DLatMorphism down = make_dlat_morphism(c3, c2, {0, 0, 1});
  DLatMorphism up = make_dlat_morphism(c3, c2, {0, 1, 1});
  // The unique point of spec(c2) lands on the two distinct points.
  std::vector<std::size_t> pd = spec_map(down);
  std::vector<std::size_t> pu = spec_map(up);
  REQUIRE(pd.size() == 1);
  REQUIRE(pu.size() == 1);
  CHECK(pd[0] != pu[0]);

  // Identity morphisms induce the identity on points.
  DLatMorphism id = make_dlat_morphism(c3, c3, {0, 1, 2});
  CHECK(spec_map(id) == std::vector<std::size_t>{0, 1});
}
