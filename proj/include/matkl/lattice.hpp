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

// Geometric lattices in atom form: every flat is stored as the set of atoms
// (rank-one flats) below it. The Kazhdan-Lusztig recursion only depends on
// the lattice of flats, so it runs entirely on this representation.

#pragma once

#include <cstdint>
#include <vector>

#include "matkl/matroid.hpp"
#include "matkl/poly.hpp"

namespace matkl {

using AtomSet = std::uint32_t;

class FlatLattice {
 public:
  struct Node {
    AtomSet atoms = 0;
    int rank = 0;
    friend auto operator<=>(const Node&, const Node&) = default;
  };

  FlatLattice() = default;
  // Nodes are sorted by (rank, atoms); the bottom must be the empty set and
  // the top must contain every atom.
  FlatLattice(int atom_count, std::vector<Node> nodes);

  // Lattice of flats of a loopless matroid (std::invalid_argument otherwise).
  static FlatLattice from_flats(const std::vector<Flat>& flats);
  static FlatLattice of(const RankOracleMatroid& m, Execution exec = Execution::parallel);

  int atom_count() const { return atom_count_; }
  int rank() const { return nodes_.empty() ? 0 : nodes_.back().rank; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<Node>& nodes() const { return nodes_; }
  const Node& node(std::size_t i) const { return nodes_[i]; }
  bool contains(AtomSet atoms) const;

  // [node(i), top], re-expressed over the atoms covering node(i).
  FlatLattice upper_interval(std::size_t i) const;

  // mu(bottom, node(i)) for every i.
  std::vector<Integer> mobius_from_bottom() const;

  // Characteristic polynomial of [bottom, node(i)] given mobius_from_bottom().
  IntPoly lower_characteristic(std::size_t i, const std::vector<Integer>& mobius) const;

  friend bool operator==(const FlatLattice& a, const FlatLattice& b) {
    return a.atom_count_ == b.atom_count_ && a.nodes_ == b.nodes_;
  }

 private:
  int atom_count_ = 0;
  std::vector<Node> nodes_;
  std::vector<AtomSet> sorted_atoms_;
};

// Isomorphism-invariant summary: rank, per-rank flat counts, the sorted
// per-atom incidence profiles and the sorted (rank, size) profile of flats.
struct LatticeFingerprint {
  std::vector<std::int64_t> data;
  std::size_t hash = 0;
  friend bool operator==(const LatticeFingerprint& a, const LatticeFingerprint& b) {
    return a.data == b.data;
  }
};

LatticeFingerprint fingerprint(const FlatLattice& lattice);

// Exact test: searches for an atom bijection carrying flats onto flats.
bool isomorphic(const FlatLattice& a, const FlatLattice& b);

}  // namespace matkl
