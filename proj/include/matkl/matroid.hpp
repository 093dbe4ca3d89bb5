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

// Matroids given by an exact rank oracle over bitset subsets of the ground
// set, and the flat-level operations on them.

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "matkl/graph.hpp"
#include "matkl/parallel.hpp"
#include "matkl/poly.hpp"

namespace matkl {

// Bitset over ground elements 0..31.
using ElementSet = std::uint32_t;

struct Flat {
  ElementSet elements = 0;
  int rank = 0;
  friend auto operator<=>(const Flat&, const Flat&) = default;
};

class RankOracleMatroid {
 public:
  using RankFunction = std::function<int(ElementSet)>;

  static constexpr int kMaxElements = 32;
  // Largest ground set the full subset sweep accepts.
  static constexpr int kMaxSweepElements = 20;

  // `registry` optionally names each element by a graph edge; it is either
  // empty or has exactly `size` entries.
  RankOracleMatroid(int size, RankFunction rank_fn, std::vector<Edge> registry = {});

  int size() const { return size_; }
  ElementSet ground() const {
    return size_ == 32 ? ~ElementSet{0} : (ElementSet{1} << size_) - 1;
  }
  int rank() const { return rank_; }
  int rank(ElementSet x) const { return rank_fn_(x & ground()); }

  ElementSet closure(ElementSet x) const;
  bool is_flat(ElementSet x) const { return closure(x) == (x & ground()); }
  bool is_loopless() const { return closure(0) == 0; }

  const std::vector<Edge>& registry() const { return registry_; }

 private:
  int size_;
  RankFunction rank_fn_;
  std::vector<Edge> registry_;
  int rank_;
};

// Elements are the edges of g in g.edges() order; rank via union-find.
RankOracleMatroid graphic_matroid(const SimpleGraph& g);

// The whirl W^n (n >= 3): elements are the edges of make_family(wheel, n);
// the rank agrees with the cycle matroid of W_n except that the rim cycle is
// independent.
RankOracleMatroid whirl_matroid(int n);

// Rim edges of W_n as an element set of graphic_matroid(make_family(wheel, n)).
ElementSet rim_elements(int n);

RankOracleMatroid boolean_matroid(int k);
RankOracleMatroid uniform_matroid(int r, int n);
RankOracleMatroid direct_sum(const RankOracleMatroid& a, const RankOracleMatroid& b);

// All flats sorted by (rank, elements). The parallel kernel tabulates the rank
// of every subset and tests each subset for closedness.
std::vector<Flat> flats(const RankOracleMatroid& m, Execution exec = Execution::parallel);

// Serial reference: closure of every subset, deduplicated.
std::vector<Flat> flats_reference(const RankOracleMatroid& m);

// M_F, the restriction to the flat f (elements keep their relative order).
RankOracleMatroid localization(const RankOracleMatroid& m, const Flat& f);

// M^F on E \ F with rank X -> r(X u F) - r(F), simplified: loops are dropped
// and each parallel class keeps its smallest element.
RankOracleMatroid contraction(const RankOracleMatroid& m, const Flat& f);

// Simplification of m (contraction at the empty flat).
RankOracleMatroid simplification(const RankOracleMatroid& m);

// sum over flats F of mu(0, F) t^(rk M - rk F); zero when m has a loop.
IntPoly characteristic_polynomial(const RankOracleMatroid& m,
                                  Execution exec = Execution::parallel);

}  // namespace matkl
