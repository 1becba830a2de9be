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

// End-to-end acceptance run: ten numbered criteria, one PASS/FAIL line
// each with the elapsed time, exit code equal to the number of failures.
// Every check is exact (isomorphism or homeomorphism witnesses, exact
// counts); the random campaigns use fixed seeds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "spclat/spclat.hpp"

using namespace spclat;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) throw std::runtime_error(what);
}

void criterion(int n, const std::string& description, double limit_seconds,
               const std::function<void()>& body) {
  const Clock::time_point start = Clock::now();
  std::string reason;
  try {
    body();
  } catch (const std::exception& e) {
    reason = e.what();
  }
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  if (reason.empty() && elapsed > limit_seconds)
    reason = "exceeded the " + std::to_string(limit_seconds) + "s time limit";
  if (reason.empty()) {
    std::printf("PASS criterion %d: %s (%.2fs)\n", n, description.c_str(), elapsed);
  } else {
    std::printf("FAIL criterion %d: %s (%.2fs): %s\n", n, description.c_str(),
                elapsed, reason.c_str());
    ++failures;
  }
  std::fflush(stdout);
}

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
  return lo + static_cast<long long>(
                  rng() % static_cast<unsigned long long>(hi - lo + 1));
}

GroupElement draw_vector(std::mt19937_64& rng, std::size_t dim, long long lo,
                         long long hi) {
  GroupElement e(dim);
  for (auto& c : e) c = draw(rng, lo, hi);
  return e;
}

DistLattice chain_lattice(std::size_t ground) {
  return from_downsets(FinPoset::chain(ground, "c"));
}

OrderedAbelianGroup integer_line() {
  return OrderedAbelianGroup(1, {}, {GroupElement{1}}, 16);
}

OrderedAbelianGroup integer_plane() {
  return OrderedAbelianGroup(2, {}, {GroupElement{1, 0}, GroupElement{0, 1}}, 16);
}

}  // namespace

int main() {
  criterion(1,
            "the free lattice on the 2-chain is a 3-chain whose spectrum is "
            "Sierpinski (2 points, 3 opens, 1 closed point)",
            1.0, [] {
              UpperSemilattice u =
                  UpperSemilattice::from_poset(FinPoset::chain(2, "x"));
              FreeResult f = free_dlat(u);
              expect(f.lattice.size() == 3, "free lattice does not have 3 elements");
              expect(poset_isomorphism(f.lattice.element_poset(),
                                       FinPoset::chain(3, "c"))
                         .has_value(),
                     "free lattice is not a chain");
              SpectralSpace s = spec(f.lattice);
              expect(s.size() == 2, "spectrum does not have 2 points");
              expect(s.opens().size() == 3, "spectrum does not have 3 opens");
              expect(s.closed_points().size() == 1,
                     "spectrum does not have exactly one closed point");
              expect(homeomorphic(s, sierpinski()), "spectrum is not Sierpinski");
            });

  criterion(2,
            "day lattices over (Z, window {1}) have spectrum "
            "Sierpinski x spc(zar) for every coefficient lattice with at most "
            "8 elements",
            10.0, [] {
              OrderedAbelianGroup z = integer_line();
              std::size_t count = 0;
              for (const DistLattice& zar : all_dist_lattices(8)) {
                DayContext ctx = zar_day(zar, z, {GroupElement{1}}, 16);
                expect(homeomorphic(ctx.space(),
                                    space_product(sierpinski(), spc(zar)), 16),
                       "no homeomorphism witness for lattice #" +
                           std::to_string(count));
                ++count;
              }
              expect(count == 36, "corpus does not have 36 lattices");
            });

  criterion(3,
            "day lattices over discrete Z with an empty window reproduce the "
            "coefficient lattice",
            1.0, [] {
              OrderedAbelianGroup z_disc(1, {}, {}, 16);
              std::size_t count = 0;
              for (const DistLattice& zar : all_dist_lattices(8)) {
                DayContext ctx = zar_day(zar, z_disc, {}, 16);
                expect(find_isomorphism(ctx.lattice(), zar, 12).has_value(),
                       "no isomorphism witness for lattice #" +
                           std::to_string(count));
                ++count;
              }
              expect(count == 36, "corpus does not have 36 lattices");
            });

  criterion(4,
            "pointwise lattices over up to 3 points are tensors with a power "
            "set, and their spectra are one copy of spc(zar) per point",
            10.0, [] {
              const std::vector<std::string> all_names = {"s1", "s2", "s3"};
              for (const DistLattice& zar : all_dist_lattices(8)) {
                for (std::size_t k = 1; k <= 3; ++k) {
                  const std::vector<std::string> names(all_names.begin(),
                                                       all_names.begin() + k);
                  PointwiseResult pw = zar_pointwise(zar, names);
                  const DistLattice& p = pw.power.lattice;
                  const DistLattice& c = pw.cross.lattice;
                  expect(p.size() == c.size(),
                         "power and tensor lattices differ in size");
                  std::vector<char> hit(c.size(), 0);
                  for (std::size_t x = 0; x < p.size(); ++x) {
                    expect(pw.iso[x] < c.size(), "witness map leaves the lattice");
                    hit[pw.iso[x]] = 1;
                  }
                  for (char h : hit) expect(h == 1, "witness map is not onto");
                  for (std::size_t x = 0; x < p.size(); ++x)
                    for (std::size_t y = 0; y < p.size(); ++y)
                      expect(p.leq(x, y) == c.leq(pw.iso[x], pw.iso[y]),
                             "witness map does not preserve the order both ways");
                  SpectralSpace left = spc(pw.lattice());
                  SpectralSpace right =
                      space_product(spc(zar), discrete_space(names));
                  expect(left.size() == spc(zar).size() * k,
                         "point count is not |spc(zar)| times |S|");
                  expect(homeomorphic(left, right, 24),
                         "spectrum is not a disjoint union of copies of spc(zar)");
                }
              }
            });

  criterion(5,
            "sheaf lattices over all coefficient/base pairs with at most 6 "
            "elements have spectrum constructible(spec(l)) x spc(zar) with "
            "multiplicative point count",
            30.0, [] {
              const std::vector<DistLattice> corpus = all_dist_lattices(6);
              for (const DistLattice& zar : corpus)
                for (const DistLattice& l : corpus) {
                  SheafResult sh = zar_sheaf(zar, l);
                  SheafSpace ss = spc_sheaf(zar, l, sh, 25);
                  expect(ss.space.size() == spec(l).size() * spc(zar).size(),
                         "point count is not |spec(l)| times |spc(zar)|");
                }
            });

  criterion(6,
            "archimedean class semilattices: Z and Z<2,3> and (Z x Z/2) give "
            "2-chains, the coordinate window in Z^2 gives the power set of a "
            "2-element set",
            4.0, [] {
              const Clock::time_point t0 = Clock::now();
              ArchSemilattice a = arch(integer_line(), {GroupElement{1}}, 16);
              expect(a.classes ==
                         std::vector<GroupElement>{GroupElement{0}, GroupElement{1}},
                     "classes over Z are not <0> < <1>");
              expect(poset_isomorphism(a.semilattice.poset(), FinPoset::chain(2, "a"))
                         .has_value(),
                     "arch of Z is not a 2-chain");

              const Clock::time_point t1 = Clock::now();
              OrderedAbelianGroup z23(1, {}, {GroupElement{2}, GroupElement{3}}, 16);
              ArchSemilattice b = arch(z23, {GroupElement{2}, GroupElement{3}}, 16);
              expect(b.classes ==
                         std::vector<GroupElement>{GroupElement{0}, GroupElement{2}},
                     "classes over Z<2,3> are not <0> < <2>=<3>");

              const Clock::time_point t2 = Clock::now();
              OrderedAbelianGroup zz2(1, {2},
                                      {GroupElement{1, 0}, GroupElement{1, 1}}, 16);
              ArchSemilattice c =
                  arch(zz2, {GroupElement{1, 0}, GroupElement{1, 1}}, 16);
              expect(c.classes == std::vector<GroupElement>{GroupElement{0, 0},
                                                            GroupElement{1, 0}},
                     "classes over Z x Z/2 are not a 2-chain");

              const Clock::time_point t3 = Clock::now();
              ArchSemilattice d = arch(
                  integer_plane(), {GroupElement{1, 0}, GroupElement{0, 1}}, 16);
              expect(d.classes ==
                         std::vector<GroupElement>{
                             GroupElement{0, 0}, GroupElement{1, 0},
                             GroupElement{0, 1}, GroupElement{1, 1}},
                     "classes over Z^2 are not the four coordinate classes");
              DistLattice square = from_downsets(FinPoset::antichain({"1", "2"}));
              expect(poset_isomorphism(d.semilattice.poset(), square.element_poset())
                         .has_value(),
                     "arch over Z^2 is not the power set of a 2-element set");
              const Clock::time_point t4 = Clock::now();

              const double limits[4] = {
                  std::chrono::duration<double>(t1 - t0).count(),
                  std::chrono::duration<double>(t2 - t1).count(),
                  std::chrono::duration<double>(t3 - t2).count(),
                  std::chrono::duration<double>(t4 - t3).count()};
              for (double dt : limits)
                expect(dt < 1.0, "one computation exceeded its 1s limit");
            });

  criterion(7,
            "day support is invariant under base extension and translation on "
            "500 seeded random instances over Z and Z^2",
            60.0, [] {
              std::mt19937_64 rng(20260815);
              DistLattice zar = chain_lattice(2);
              OrderedAbelianGroup line = integer_line();
              OrderedAbelianGroup plane = integer_plane();
              for (std::size_t inst = 0; inst < 500; ++inst) {
                const OrderedAbelianGroup& g = (inst % 2) ? plane : line;
                const std::size_t dim = g.dim();
                std::vector<GroupElement> window;
                const std::size_t wn = 1 + rng() % 3;
                for (std::size_t i = 0; i < wn; ++i)
                  window.push_back(draw_vector(rng, dim, 1, 4));
                ArchSemilattice cls = arch(g, window, 16);
                std::vector<GroupElement> a_list;
                for (const GroupElement& w : window)
                  if (rng() % 2) a_list.push_back(w);
                FilteredPresentation f =
                    generator(zar, rng() % zar.size(), g, a_list, 16);
                DayElement s = day_support(f, cls, 16);

                std::vector<GroupElement> seed = f.base.elements;
                const std::size_t extra = 1 + rng() % 2;
                for (std::size_t i = 0; i < extra; ++i)
                  seed.push_back(draw_vector(rng, dim, 0, 4));
                FilteredPresentation f2 =
                    extend_presentation(f, saturate(g, seed, 16), 16);
                expect(day_support(f2, cls, 16) == s,
                       "support changed under base extension at instance " +
                           std::to_string(inst));

                FilteredPresentation f3 = shift(f, draw_vector(rng, dim, -4, 4));
                expect(day_support(f3, cls, 16) == s,
                       "support changed under translation at instance " +
                           std::to_string(inst));
              }
            });

  criterion(8,
            "theta sets decompose as intersections over join triples and name "
            "free-lattice elements on 500 seeded random instances",
            60.0, [] {
              std::mt19937_64 rng(20260815);
              OrderedAbelianGroup line = integer_line();
              OrderedAbelianGroup plane = integer_plane();
              std::size_t instances = 0;
              for (std::size_t round = 0; instances < 500; ++round) {
                const OrderedAbelianGroup& g = (round % 2) ? plane : line;
                const std::size_t dim = g.dim();
                std::vector<GroupElement> window;
                const std::size_t wn = 1 + rng() % 3;
                for (std::size_t i = 0; i < wn; ++i)
                  window.push_back(draw_vector(rng, dim, 1, 4));
                ArchSemilattice cls = arch(g, window, 16);
                FreeResult fr = free_dlat(cls.semilattice);

                std::vector<GroupElement> seeds = {GroupElement(dim, 0)};
                const std::size_t sn = 2 + rng() % 3;
                for (std::size_t i = 0; i < sn; ++i)
                  seeds.push_back(draw_vector(rng, dim, 0, 4));
                SaturatedSet b = saturate(g, seeds, 16);

                for (const GroupElement& a : b.elements) {
                  Bitset th = theta(b, a, cls, 16);
                  fr.lattice.element_of_mask(th);  // throws unless a downset
                  Bitset rhs = Bitset::full(cls.classes.size());
                  for (const GroupElement& e : b.elements) {
                    JoinOutcome j = g.try_join(a, e, 16);
                    expect(j.kind == JoinOutcome::Kind::Found,
                           "join missing inside a saturated base");
                    SaturatedSet triple = make_saturated(g, {a, e, j.join}, 16);
                    rhs &= theta(triple, a, cls, 16);
                  }
                  expect(th == rhs,
                         "theta is not the intersection over join triples at "
                         "instance " +
                             std::to_string(instances));
                  ++instances;
                }
              }
              expect(instances >= 500, "fewer than 500 instances");
            });

  criterion(9,
            "closed sets of the day spectrum over the 3-chain count nested "
            "pairs of closed sets of spc(zar): 6 == 6",
            1.0, [] {
              DistLattice zar = chain_lattice(2);
              DayContext ctx = zar_day(zar, integer_line(), {GroupElement{1}}, 16);
              SpectralSpace day_space = ctx.space();
              // Complementation matches closed sets with opens one-to-one.
              const std::size_t closed_count = day_space.opens().size();

              SpectralSpace base = spc(zar);
              DistLattice base_opens = base.opens();
              std::vector<Bitset> closed;
              for (std::size_t i = 0; i < base_opens.size(); ++i)
                closed.push_back(base_opens.mask(i).complement());
              std::size_t nested_pairs = 0;
              for (const Bitset& z1 : closed)
                for (const Bitset& z2 : closed)
                  if ((z1 & z2) == z1) ++nested_pairs;

              expect(closed_count == nested_pairs,
                     "closed sets do not biject with nested pairs");
              expect(closed_count == 6, "expected exactly 6 closed sets");
            });

  criterion(10,
            "universal-property oracles pass over the corpus and all three "
            "mutations produce counterexamples",
            300.0, [] {
              CheckReport free_r = suite_free_universal(5, 6);
              expect(free_r.passed() && free_r.instances_checked > 0,
                     "free universal property failed: " +
                         free_r.counterexample.value_or("no instances"));
              CheckReport bool_r = suite_boolean_reflection(6, 6);
              expect(bool_r.passed() && bool_r.instances_checked > 0,
                     "boolean reflection failed: " +
                         bool_r.counterexample.value_or("no instances"));
              CheckReport tensor_r = suite_tensor_coproduct(6, 6);
              expect(tensor_r.passed() && tensor_r.instances_checked > 0,
                     "tensor coproduct failed: " +
                         tensor_r.counterexample.value_or("no instances"));
              CheckReport birkhoff_r = suite_birkhoff_roundtrip(8, 50, 20260815);
              expect(birkhoff_r.passed() && birkhoff_r.instances_checked > 0,
                     "birkhoff roundtrip failed: " +
                         birkhoff_r.counterexample.value_or("no instances"));

              // Mutation 1: the 3-chain passed off as free on the 3-chain
              // semilattice.
              UpperSemilattice u3 =
                  UpperSemilattice::from_poset(FinPoset::chain(3, "u"));
              CheckReport m1 =
                  check_free_universal_against(u3, chain_lattice(2), {0, 1, 2}, 6);
              expect(!m1.passed() && m1.counterexample.has_value(),
                     "free mutation produced no counterexample");

              // Mutation 2: a Boolean reflection whose unit collapses the
              // middle of the 3-chain.
              DistLattice c3 = chain_lattice(2);
              BooleanizeResult bt = booleanize(c3);
              std::vector<std::size_t> unit = bt.unit;
              unit[1] = bt.lattice.bottom();
              CheckReport m2 =
                  check_boolean_reflection_against(c3, bt.lattice, unit, 6);
              expect(!m2.passed() && m2.counterexample.has_value(),
                     "boolean mutation produced no counterexample");

              // Mutation 3: one factor with identity injections passed off
              // as the coproduct.
              std::vector<std::size_t> id = {0, 1, 2};
              CheckReport m3 = check_tensor_coproduct_against(c3, c3, c3, id, id, 6);
              expect(!m3.passed() && m3.counterexample.has_value(),
                     "tensor mutation produced no counterexample");
            });

  if (failures == 0)
    std::printf("all 10 criteria passed\n");
  else
    std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
