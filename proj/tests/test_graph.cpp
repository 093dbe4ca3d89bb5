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

#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "matkl/graph.hpp"
#include "matkl/matroid.hpp"
#include "test_support.hpp"

using namespace matkl;

namespace {

// The 12-vertex example graph with vertices shifted to 0..11.
SimpleGraph figure_graph() {
  const std::vector<std::pair<int, int>> one_based{
      {11, 8}, {9, 8}, {11, 10}, {11, 3}, {8, 1}, {4, 5}, {2, 4}, {8, 2}, {7, 8},
      {1, 3}, {4, 3}, {1, 4}, {6, 10}, {6, 7}, {10, 7}, {11, 12}, {12, 9}, {5, 2}};
  std::vector<Edge> edges;
  for (auto [u, v] : one_based) edges.push_back({u - 1, v - 1});
  return SimpleGraph(12, edges);
}

VertexPartition figure_composition() {
  return VertexPartition::from_lists({{0, 2, 3}, {1, 4}, {5, 6, 9}, {7}, {8, 10, 11}});
}

std::vector<Edge> sorted_edges(std::vector<Edge> e) {
  for (auto& x : e) {
    if (x.u > x.v) std::swap(x.u, x.v);
  }
  std::sort(e.begin(), e.end());
  return e;
}

IntPoly falling(int n) {
  IntPoly p{1};
  for (int i = 0; i < n; ++i) p *= IntPoly{-i, 1};
  return p;
}

}  // namespace

TEST_CASE("family constructions") {
  const SimpleGraph f1 = make_family(GraphFamily::fan, 1);
  CHECK(f1.n_vertices() == 2);
  CHECK(f1.n_edges() == 1);
  const SimpleGraph w3 = make_family(GraphFamily::wheel, 3);
  CHECK(w3.n_vertices() == 4);
  CHECK(w3.n_edges() == 6);
  for (int n = 1; n <= 10; ++n) {
    CHECK(make_family(GraphFamily::fan, n).n_edges() == static_cast<std::size_t>(2 * n - 1));
    CHECK(make_family(GraphFamily::square_of_path, n).n_edges() ==
          static_cast<std::size_t>(2 * n - 1));
    CHECK(rank(make_family(GraphFamily::fan, n)) == n);
  }
  for (int n = 3; n <= 10; ++n) CHECK(rank(make_family(GraphFamily::wheel, n)) == n);
  CHECK(rank(SimpleGraph(5, {})) == 0);
  CHECK_THROWS_AS(make_family(GraphFamily::wheel, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_family(GraphFamily::cycle, 2), std::invalid_argument);
  CHECK_THROWS_AS(make_family(GraphFamily::fan, 0), std::invalid_argument);
}

TEST_CASE("square of path and fan agree for small n") {
  for (int n = 1; n <= 4; ++n) {
    const auto a = canonical_code(make_family(GraphFamily::square_of_path, n));
    const auto b = canonical_code(make_family(GraphFamily::fan, n));
    REQUIRE(a.has_value());
    CHECK(a == b);
  }
  CHECK(canonical_code(make_family(GraphFamily::square_of_path, 5)) !=
        canonical_code(make_family(GraphFamily::fan, 5)));
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SimpleGraph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("induced union and contraction on the figure example") {
  const SimpleGraph g = figure_graph();
  const VertexPartition c = figure_composition();
  require_composition(g, c);
  const std::vector<Edge> bold = sorted_edges({{0, 2}, {3, 2}, {0, 3}, {5, 9}, {5, 6}, {9, 6},
                                               {10, 11}, {11, 8}, {4, 1}});
  CHECK(induced_union(g, c).edges() == bold);
  CHECK(induced_union(g, c).n_vertices() == 12);
  const std::vector<Edge> quotient =
      sorted_edges({{3, 4}, {3, 0}, {0, 1}, {3, 1}, {2, 3}, {0, 4}, {2, 4}});
  const SimpleGraph q = contract(g, c);
  CHECK(q.n_vertices() == 5);
  CHECK(q.edges() == quotient);
  CHECK(rank(g) == rank(induced_union(g, c)) + rank(q));
}

TEST_CASE("contraction of the fan F_12") {
  const SimpleGraph f = make_family(GraphFamily::fan, 12);
  const VertexPartition c =
      VertexPartition::from_lists({{0, 1, 2, 7, 9, 10}, {3, 4}, {5}, {6}, {8}, {11}, {12}});
  const SimpleGraph q = contract(f, c);
  CHECK(q.n_vertices() == 7);
  CHECK(q.edges() == sorted_edges({{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {1, 2},
                                   {2, 3}, {5, 6}}));
}

TEST_CASE("trivial compositions") {
  const SimpleGraph w = make_family(GraphFamily::wheel, 5);
  CHECK(induced_union(w, VertexPartition::singletons(6)).n_edges() == 0);
  CHECK(induced_union(w, VertexPartition::whole(6)) == w);
  CHECK(contract(w, VertexPartition::singletons(6)) == w);
  CHECK(contract(w, VertexPartition::whole(6)).n_vertices() == 1);
  const SimpleGraph p = make_family(GraphFamily::path, 3);
  CHECK_THROWS_AS(contract(p, VertexPartition::from_lists({{0, 2}, {1}})), std::invalid_argument);
  CHECK_THROWS_AS(induced_union(p, VertexPartition::from_lists({{0, 2}, {1}})),
                  std::invalid_argument);
}

TEST_CASE("composition enumeration") {
  CHECK(composition_count(make_family(GraphFamily::path, 3)) == 4);
  CHECK(composition_count(make_family(GraphFamily::path, 1)) == 1);
  CHECK(composition_count(make_family(GraphFamily::fan, 3)) == 13);
  CHECK(testing::brute_composition_count(make_family(GraphFamily::fan, 3)) == 13);

  const auto path = compositions(make_family(GraphFamily::path, 3));
  std::set<std::vector<VertexSet>> seen;
  for (const auto& c : path) seen.insert(c.blocks());
  CHECK(seen.size() == 4);
  CHECK(seen.count({0b011, 0b100}) == 1);
  CHECK(seen.count({0b101, 0b010}) == 0);
}

TEST_CASE("composition counts match brute force and flat counts") {
  auto rng = testing::make_rng(11);
  std::vector<SimpleGraph> graphs;
  for (int n = 1; n <= 6; ++n) graphs.push_back(make_family(GraphFamily::fan, n));
  for (int n = 3; n <= 6; ++n) graphs.push_back(make_family(GraphFamily::wheel, n));
  for (int trial = 0; trial < 25; ++trial) {
    graphs.push_back(testing::random_graph(rng, testing::uniform_int(rng, 1, 7), 0.45));
  }
  for (const auto& g : graphs) {
    const std::size_t count = composition_count(g);
    CHECK(count == testing::brute_composition_count(g));
    CHECK(count == flats(graphic_matroid(g)).size());
    std::set<std::vector<VertexSet>> unique;
    for_each_composition(g, [&](const VertexPartition& c) {
      unique.insert(c.blocks());
      for (VertexSet b : c.blocks()) CHECK(testing::induced_connected(g, b));
    });
    CHECK(unique.size() == count);
  }
}

TEST_CASE("rank additivity over compositions") {
  std::vector<SimpleGraph> graphs;
  for (int n = 1; n <= 6; ++n) graphs.push_back(make_family(GraphFamily::fan, n));
  for (int n = 3; n <= 6; ++n) graphs.push_back(make_family(GraphFamily::wheel, n));
  for (const auto& g : graphs) {
    for_each_composition(g, [&](const VertexPartition& c) {
      CHECK(rank(g) == rank(induced_union(g, c)) + rank(contract(g, c)));
    });
  }
}

TEST_CASE("chromatic polynomials of families") {
  const IntPoly t{0, 1};
  for (int b = 1; b <= 8; ++b) {
    CHECK(chromatic_polynomial(make_family(GraphFamily::path, b)) ==
          t * pow(IntPoly{-1, 1}, static_cast<unsigned>(b - 1)));
  }
  for (int n = 1; n <= 9; ++n) {
    CHECK(chromatic_polynomial(make_family(GraphFamily::fan, n)) ==
          t * IntPoly{-1, 1} * pow(IntPoly{-2, 1}, static_cast<unsigned>(n - 1)));
  }
  for (int n = 3; n <= 9; ++n) {
    const IntPoly sign{n % 2 == 1 ? 1 : -1};  // (-1)^(n-1)
    CHECK(chromatic_polynomial(make_family(GraphFamily::wheel, n)) ==
          t * (pow(IntPoly{-2, 1}, static_cast<unsigned>(n)) - sign * IntPoly{-2, 1}));
  }
  for (int n = 1; n <= 7; ++n) {
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) e.push_back({u, v});
    }
    CHECK(chromatic_polynomial(SimpleGraph(n, e)) == falling(n));
  }
  CHECK(chromatic_polynomial(SimpleGraph(0, {})) == IntPoly{1});
}

TEST_CASE("chromatic polynomial counts colorings") {
  auto rng = testing::make_rng(12);
  for (int trial = 0; trial < 40; ++trial) {
    const SimpleGraph g = testing::random_graph(rng, testing::uniform_int(rng, 1, 7), 0.5);
    const IntPoly chi = chromatic_polynomial(g);
    for (int q = 0; q <= 4; ++q) CHECK(chi.eval(Integer(q)) == testing::count_colorings(g, q));
  }
}

TEST_CASE("biconnected components") {
  const auto tree = biconnected_components(make_family(GraphFamily::path, 5));
  CHECK(tree.size() == 4);
  for (const auto& b : tree) CHECK(b.n_edges() == 1);
  CHECK(biconnected_components(make_family(GraphFamily::cycle, 6)).size() == 1);
  const SimpleGraph bowtie(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  const auto blocks = biconnected_components(bowtie);
  CHECK(blocks.size() == 2);
  for (const auto& b : blocks) CHECK(b.n_edges() == 3);
}

TEST_CASE("chromatic polynomial is multiplicative over blocks") {
  auto rng = testing::make_rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    const SimpleGraph g = testing::random_graph(rng, testing::uniform_int(rng, 1, 8), 0.35);
    const auto blocks = biconnected_components(g);
    IntPoly product{1};
    for (const auto& b : blocks) product *= chromatic_polynomial(b);
    const int shift = static_cast<int>(blocks.size()) - component_count(g);
    REQUIRE(shift >= 0);
    CHECK(divide_exact(product, IntPoly::monomial(Integer(1), static_cast<std::size_t>(shift))) ==
          chromatic_polynomial(g));
    std::size_t edges = 0;
    for (const auto& b : blocks) edges += b.n_edges();
    CHECK(edges == g.n_edges());
  }
}

TEST_CASE("canonical code is invariant under relabeling") {
  auto rng = testing::make_rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = testing::uniform_int(rng, 1, 8);
    const SimpleGraph g = testing::random_graph(rng, n, 0.5);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> e;
    for (const auto& x : g.edges()) e.push_back({perm[x.u], perm[x.v]});
    const SimpleGraph h(n, e);
    const auto a = canonical_code(g);
    const auto b = canonical_code(h);
    REQUIRE(a.has_value());
    CHECK(a == b);
  }
  CHECK(canonical_code(make_family(GraphFamily::path, 4)) !=
        canonical_code(SimpleGraph(4, {{0, 1}, {0, 2}, {0, 3}})));
}
