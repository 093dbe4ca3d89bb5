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

#include "matkl/lattice.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

namespace matkl {
namespace {

bool subset(AtomSet a, AtomSet b) { return (a & ~b) == 0; }

AtomSet full(int atoms) { return atoms == 32 ? ~AtomSet{0} : (AtomSet{1} << atoms) - 1; }

// Per-atom profile: how many flats of each rank contain the atom.
std::vector<std::vector<std::int64_t>> atom_profiles(const FlatLattice& lattice) {
  const int n = lattice.atom_count();
  std::vector<std::vector<std::int64_t>> out(
      static_cast<std::size_t>(n), std::vector<std::int64_t>(lattice.rank() + 1, 0));
  for (const auto& node : lattice.nodes()) {
    AtomSet x = node.atoms;
    while (x != 0) {
      out[std::countr_zero(x)][node.rank] += 1;
      x &= x - 1;
    }
  }
  return out;
}

// line[x][y]: atoms of the rank-two flat spanned by atoms x != y.
std::vector<std::vector<AtomSet>> line_table(const FlatLattice& lattice) {
  const int n = lattice.atom_count();
  std::vector<std::vector<AtomSet>> line(n, std::vector<AtomSet>(n, 0));
  for (const auto& node : lattice.nodes()) {
    if (node.rank != 2) continue;
    for (int x = 0; x < n; ++x) {
      if ((node.atoms >> x & 1) == 0) continue;
      for (int y = 0; y < n; ++y) {
        if (y != x && (node.atoms >> y & 1) != 0) line[x][y] = node.atoms;
      }
    }
  }
  return line;
}

}  // namespace

FlatLattice::FlatLattice(int atom_count, std::vector<Node> nodes)
    : atom_count_(atom_count), nodes_(std::move(nodes)) {
  if (atom_count < 0 || atom_count > 32) throw std::invalid_argument("atom count out of range");
  if (nodes_.empty() || nodes_.front().atoms != 0 || nodes_.front().rank != 0) {
    throw std::invalid_argument("lattice must start with the empty bottom");
  }
  if (nodes_.back().atoms != full(atom_count)) {
    throw std::invalid_argument("lattice top must contain every atom");
  }
  if (!std::is_sorted(nodes_.begin(), nodes_.end()) ||
      std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw std::invalid_argument("lattice nodes must be strictly sorted by (rank, atoms)");
  }
  sorted_atoms_.reserve(nodes_.size());
  for (const auto& node : nodes_) sorted_atoms_.push_back(node.atoms);
  std::sort(sorted_atoms_.begin(), sorted_atoms_.end());
}

FlatLattice FlatLattice::from_flats(const std::vector<Flat>& flats) {
  if (flats.empty() || flats.front().elements != 0) {
    throw std::invalid_argument("lattice of flats requires a loopless matroid");
  }
  std::vector<ElementSet> atoms;
  for (const auto& f : flats) {
    if (f.rank == 1) atoms.push_back(f.elements);
  }
  if (atoms.size() > 32) throw std::invalid_argument("too many atoms");
  std::vector<Node> nodes;
  nodes.reserve(flats.size());
  for (const auto& f : flats) {
    AtomSet mask = 0;
    for (std::size_t j = 0; j < atoms.size(); ++j) {
      if ((atoms[j] & ~f.elements) == 0) mask |= AtomSet{1} << j;
    }
    nodes.push_back({mask, f.rank});
  }
  std::sort(nodes.begin(), nodes.end());
  return FlatLattice(static_cast<int>(atoms.size()), std::move(nodes));
}

FlatLattice FlatLattice::of(const RankOracleMatroid& m, Execution exec) {
  return from_flats(flats(m, exec));
}

bool FlatLattice::contains(AtomSet atoms) const {
  return std::binary_search(sorted_atoms_.begin(), sorted_atoms_.end(), atoms);
}

FlatLattice FlatLattice::upper_interval(std::size_t i) const {
  const Node& f = nodes_.at(i);
  std::vector<AtomSet> covers;
  for (std::size_t j = i + 1; j < nodes_.size(); ++j) {
    if (nodes_[j].rank == f.rank + 1 && subset(f.atoms, nodes_[j].atoms)) {
      covers.push_back(nodes_[j].atoms);
    }
  }
  std::vector<Node> out;
  for (std::size_t j = i; j < nodes_.size(); ++j) {
    if (!subset(f.atoms, nodes_[j].atoms)) continue;
    AtomSet mask = 0;
    for (std::size_t c = 0; c < covers.size(); ++c) {
      if (subset(covers[c], nodes_[j].atoms)) mask |= AtomSet{1} << c;
    }
    out.push_back({mask, nodes_[j].rank - f.rank});
  }
  std::sort(out.begin(), out.end());
  return FlatLattice(static_cast<int>(covers.size()), std::move(out));
}

std::vector<Integer> FlatLattice::mobius_from_bottom() const {
  std::vector<Integer> mu(nodes_.size());
  mu[0] = 1;
  for (std::size_t i = 1; i < nodes_.size(); ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (nodes_[j].rank < nodes_[i].rank && subset(nodes_[j].atoms, nodes_[i].atoms)) {
        sum += mu[j];
      }
    }
    mu[i] = -sum;
  }
  return mu;
}

IntPoly FlatLattice::lower_characteristic(std::size_t i, const std::vector<Integer>& mobius) const {
  IntPoly chi;
  const Node& f = nodes_.at(i);
  for (std::size_t j = 0; j <= i; ++j) {
    if (subset(nodes_[j].atoms, f.atoms)) {
      chi += IntPoly::monomial(mobius[j], static_cast<std::size_t>(f.rank - nodes_[j].rank));
    }
  }
  return chi;
}

LatticeFingerprint fingerprint(const FlatLattice& lattice) {
  LatticeFingerprint fp;
  auto& d = fp.data;
  d.push_back(lattice.rank());
  d.push_back(lattice.atom_count());
  d.push_back(static_cast<std::int64_t>(lattice.size()));
  std::vector<std::int64_t> per_rank(lattice.rank() + 1, 0);
  std::vector<std::int64_t> shapes;
  for (const auto& node : lattice.nodes()) {
    per_rank[node.rank] += 1;
    shapes.push_back(std::int64_t{node.rank} * 64 + std::popcount(node.atoms));
  }
  d.insert(d.end(), per_rank.begin(), per_rank.end());
  auto profiles = atom_profiles(lattice);
  std::sort(profiles.begin(), profiles.end());
  for (const auto& p : profiles) d.insert(d.end(), p.begin(), p.end());
  std::sort(shapes.begin(), shapes.end());
  d.insert(d.end(), shapes.begin(), shapes.end());
  std::size_t h = 1469598103934665603ULL;
  for (std::int64_t v : d) {
    h ^= std::hash<std::int64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  fp.hash = h;
  return fp;
}

bool isomorphic(const FlatLattice& a, const FlatLattice& b) {
  if (a == b) return true;
  if (a.atom_count() != b.atom_count() || a.size() != b.size() || a.rank() != b.rank()) {
    return false;
  }
  if (!(fingerprint(a) == fingerprint(b))) return false;

  const int n = a.atom_count();
  const auto prof_a = atom_profiles(a);
  const auto prof_b = atom_profiles(b);
  const auto line_a = line_table(a);
  const auto line_b = line_table(b);
  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);

  auto consistent = [&](int x, int y) {
    for (int p = 0; p < n; ++p) {
      if (image[p] < 0) continue;
      const AtomSet la = line_a[x][p];
      const AtomSet lb = line_b[y][image[p]];
      if (std::popcount(la) != std::popcount(lb)) return false;
      for (int q = 0; q < n; ++q) {
        if (image[q] < 0) continue;
        if (((la >> q) & 1) != ((lb >> image[q]) & 1)) return false;
      }
    }
    return true;
  };

  auto verify = [&]() {
    for (const auto& node : a.nodes()) {
      AtomSet mapped = 0;
      AtomSet x = node.atoms;
      while (x != 0) {
        mapped |= AtomSet{1} << image[std::countr_zero(x)];
        x &= x - 1;
      }
      if (!b.contains(mapped)) return false;
    }
    return true;
  };

  std::function<bool(int)> extend = [&](int x) -> bool {
    if (x == n) return verify();
    for (int y = 0; y < n; ++y) {
      if (used[y] || prof_a[x] != prof_b[y] || !consistent(x, y)) continue;
      image[x] = y;
      used[y] = true;
      if (extend(x + 1)) return true;
      image[x] = -1;
      used[y] = false;
    }
    return false;
  };
  return extend(0);
}

}  // namespace matkl
