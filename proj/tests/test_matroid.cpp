// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <bit>
#include <numeric>

#include "doctest.h"
#include "matkl/graph.hpp"
#include "matkl/lattice.hpp"
#include "matkl/matroid.hpp"
#include "test_support.hpp"

using namespace matkl;

namespace {

std::vector<RankOracleMatroid> sample_matroids() {
  std::vector<RankOracleMatroid> ms;
  for (int n = 1; n <= 5; ++n) ms.push_back(graphic_matroid(make_family(GraphFamily::fan, n)));
  for (int n = 3; n <= 5; ++n) {
    ms.push_back(graphic_matroid(make_family(GraphFamily::wheel, n)));
    ms.push_back(whirl_matroid(n));
  }
  ms.push_back(uniform_matroid(2, 4));
  ms.push_back(uniform_matroid(3, 6));
  ms.push_back(boolean_matroid(4));
  ms.push_back(direct_sum(uniform_matroid(2, 3), boolean_matroid(2)));
  auto rng = testing::make_rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    ms.push_back(graphic_matroid(testing::random_graph(rng, testing::uniform_int(rng, 2, 6), 0.5)));
  }
  return ms;
}

IntPoly strip_t(const IntPoly& p, int k) {
  return divide_exact(p, IntPoly::monomial(Integer(1), static_cast<std::size_t>(k)));
}

}  // namespace

TEST_CASE("rank axioms hold for every sample matroid") {
  auto rng = testing::make_rng(22);
  for (const auto& m : sample_matroids()) {
    const ElementSet g = m.ground();
    CHECK(m.rank(0) == 0);
    for (int trial = 0; trial < 200; ++trial) {
      const ElementSet x = static_cast<ElementSet>(rng()) & g;
      const ElementSet y = static_cast<ElementSet>(rng()) & g;
      CHECK(m.rank(x) >= 0);
      CHECK(m.rank(x) <= std::popcount(x));
      CHECK(m.rank(x & y) <= m.rank(x));
      CHECK(m.rank(x | y) + m.rank(x & y) <= m.rank(x) + m.rank(y));
      const ElementSet c = m.closure(x);
      CHECK((c & x) == x);
      CHECK(m.rank(c) == m.rank(x));
      CHECK(m.closure(c) == c);
    }
  }
}

TEST_CASE("parallel flat enumeration matches the reference") {
  for (const auto& m : sample_matroids()) {
    const auto ref = flats_reference(m);
    CHECK(flats(m, Execution::serial) == ref);
    CHECK(flats(m, Execution::parallel) == ref);
    for (const auto& f : ref) {
      CHECK(m.is_flat(f.elements));
      CHECK(m.rank(f.elements) == f.rank);
    }
  }
}

TEST_CASE("flat counts of fans and wheels") {
  const std::vector<std::size_t> fan{13, 34, 89, 233, 610, 1597};
  for (int n = 3; n <= 8; ++n) {
    CHECK(flats(graphic_matroid(make_family(GraphFamily::fan, n))).size() == fan[n - 3]);
  }
  const std::vector<std::size_t> wheel{15, 43, 118, 316, 836};
  for (int n = 3; n <= 7; ++n) {
    CHECK(flats(graphic_matroid(make_family(GraphFamily::wheel, n))).size() == wheel[n - 3]);
  }
  CHECK(flats(uniform_matroid(2, 5)).size() == 7);
  CHECK(flats(boolean_matroid(5)).size() == 32);
}

TEST_CASE("whirl is the wheel with the rim relaxed") {
  for (int n = 3; n <= 7; ++n) {
    const auto wheel = graphic_matroid(make_family(GraphFamily::wheel, n));
    const auto whirl = whirl_matroid(n);
    const ElementSet rim = rim_elements(n);
    REQUIRE(whirl.size() == wheel.size());
    CHECK(std::popcount(rim) == n);
    CHECK(wheel.rank(rim) == n - 1);
    CHECK(whirl.rank(rim) == n);
    for (ElementSet x = 0; x <= wheel.ground(); ++x) {
      if (x != rim) CHECK(whirl.rank(x) == wheel.rank(x));
    }
    // Relaxing a circuit-hyperplane removes it and adds its n maximal subsets.
    CHECK(flats(whirl).size() == flats(wheel).size() + static_cast<std::size_t>(n) - 1);
  }
  CHECK_THROWS_AS(whirl_matroid(2), std::invalid_argument);
}

TEST_CASE("localization and contraction") {
  const auto m = graphic_matroid(make_family(GraphFamily::wheel, 4));
  const auto all = flats(m);
  for (const auto& f : all) {
    const auto loc = localization(m, f);
    CHECK(loc.size() == std::popcount(f.elements));
    CHECK(loc.rank() == f.rank);
    CHECK(flats(loc).size() ==
          static_cast<std::size_t>(std::count_if(all.begin(), all.end(),
                                                 [&](const Flat& g) {
                                                   return (g.elements & ~f.elements) == 0;
                                                 })));
    const auto con = contraction(m, f);
    CHECK(con.rank() == m.rank() - f.rank);
    CHECK(con.is_loopless());
    CHECK(flats(con).size() ==
          static_cast<std::size_t>(std::count_if(all.begin(), all.end(),
                                                 [&](const Flat& g) {
                                                   return (f.elements & ~g.elements) == 0;
                                                 })));
  }
  REQUIRE_FALSE(m.is_flat(m.closure(0b1) | 0b10));
  CHECK_THROWS_AS(localization(m, Flat{m.closure(0b1) | 0b10, 1}), std::invalid_argument);
  CHECK_THROWS_AS(contraction(m, Flat{m.closure(0b1) | 0b10, 1}), std::invalid_argument);
}

TEST_CASE("simplification") {
  const auto s = simplification(graphic_matroid(make_family(GraphFamily::wheel, 5)));
  CHECK(s.size() == 10);
  const auto loopy = RankOracleMatroid(3, [](ElementSet x) { return std::popcount(x & 0b011u) > 0 ? 1 : 0; });
  const auto t = simplification(loopy);
  CHECK(t.size() == 1);
  CHECK(t.rank() == 1);
  CHECK_FALSE(loopy.is_loopless());
}

TEST_CASE("characteristic polynomial of graphic matroids") {
  auto rng = testing::make_rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const SimpleGraph g = testing::random_graph(rng, testing::uniform_int(rng, 1, 7), 0.5);
    const auto m = graphic_matroid(g);
    CHECK(characteristic_polynomial(m) == strip_t(chromatic_polynomial(g), component_count(g)));
    CHECK(characteristic_polynomial(m, Execution::serial) == characteristic_polynomial(m));
  }
  CHECK(characteristic_polynomial(boolean_matroid(3)) == pow(IntPoly{-1, 1}, 3));
  const auto loopy = RankOracleMatroid(2, [](ElementSet x) { return std::popcount(x & 0b01u); });
  CHECK(characteristic_polynomial(loopy).is_zero());
}

TEST_CASE("characteristic polynomial is multiplicative on direct sums") {
  const auto ms = sample_matroids();
  for (std::size_t i = 0; i + 1 < ms.size(); i += 3) {
    if (ms[i].size() + ms[i + 1].size() > 16) continue;
    CHECK(characteristic_polynomial(direct_sum(ms[i], ms[i + 1])) ==
          characteristic_polynomial(ms[i]) * characteristic_polynomial(ms[i + 1]));
  }
}

TEST_CASE("lattice construction and intervals") {
  const auto m = graphic_matroid(make_family(GraphFamily::wheel, 4));
  const auto lat = FlatLattice::of(m);
  CHECK(lat.size() == 43);
  CHECK(lat.rank() == 4);
  CHECK(lat.atom_count() == 8);
  CHECK(lat.upper_interval(0) == lat);
  CHECK(lat.upper_interval(lat.size() - 1).size() == 1);
  const auto mu = lat.mobius_from_bottom();
  CHECK(mu[0] == 1);
  CHECK(lat.lower_characteristic(lat.size() - 1, mu) == characteristic_polynomial(m));
  for (std::size_t i = 0; i < lat.size(); ++i) {
    CHECK(lat.contains(lat.node(i).atoms));
    const auto up = lat.upper_interval(i);
    CHECK(up.rank() == lat.rank() - lat.node(i).rank);
  }
  CHECK_THROWS_AS(FlatLattice(2, {{0, 0}, {0b01, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(
      FlatLattice::from_flats(flats(RankOracleMatroid(2, [](ElementSet x) {
        return std::popcount(x & 0b01u);
      }))),
      std::invalid_argument);
}

TEST_CASE("lattice isomorphism") {
  auto rng = testing::make_rng(24);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = testing::uniform_int(rng, 2, 6);
    const SimpleGraph g = testing::random_graph(rng, n, 0.55);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (const auto& x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
    std::shuffle(e.begin(), e.end(), rng);
    const auto a = FlatLattice::of(graphic_matroid(g));
    const auto b = FlatLattice::of(graphic_matroid(SimpleGraph(n, e)));
    CHECK(fingerprint(a) == fingerprint(b));
    CHECK(isomorphic(a, b));
  }
  // Lattices with different characteristic polynomials are never isomorphic.
  std::vector<FlatLattice> pool;
  for (int trial = 0; trial < 40; ++trial) {
    pool.push_back(FlatLattice::of(
        graphic_matroid(testing::random_graph(rng, testing::uniform_int(rng, 3, 6), 0.6))));
  }
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const auto& a = pool[i];
      const auto& b = pool[j];
      const bool iso = isomorphic(a, b);
      if (iso) {
        CHECK(fingerprint(a) == fingerprint(b));
        CHECK(a.lower_characteristic(a.size() - 1, a.mobius_from_bottom()) ==
              b.lower_characteristic(b.size() - 1, b.mobius_from_bottom()));
      }
      if (a.size() != b.size() ||
          a.lower_characteristic(a.size() - 1, a.mobius_from_bottom()) !=
              b.lower_characteristic(b.size() - 1, b.mobius_from_bottom())) {
        CHECK_FALSE(iso);
      }
    }
  }
  const auto wheel = FlatLattice::of(graphic_matroid(make_family(GraphFamily::wheel, 3)));
  const auto whirl = FlatLattice::of(whirl_matroid(3));
  CHECK_FALSE(isomorphic(wheel, whirl));
}
