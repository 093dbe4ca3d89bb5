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

// Simple labeled graphs, the named families used throughout the library and
// the structural operations the Kazhdan-Lusztig recursion needs on graphs.

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "matkl/poly.hpp"

namespace matkl {

// Bitset over vertices 0..63.
using VertexSet = std::uint64_t;

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple graph on vertices 0..n-1. Edges are stored normalized
// (u < v) and sorted; loops and repeated edges are rejected.
class SimpleGraph {
 public:
  static constexpr int kMaxVertices = 64;

  SimpleGraph() = default;
  SimpleGraph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t n_edges() const { return edges_.size(); }
  VertexSet neighbors(int v) const { return adj_[v]; }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  VertexSet all_vertices() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
};

enum class GraphFamily { path, cycle, fan, wheel, square_of_path };

// path: n vertices 0-1-...-(n-1). cycle: n >= 3 vertices.
// fan F_n: hub 0 joined to the path 1..n. wheel W_n (n >= 3): hub 0 joined to
// the cycle 1..n. square_of_path S_n: the path on n+1 vertices 0..n plus every
// chord {i, i+2}; it has the same edge count and cycle matroid as F_n.
SimpleGraph make_family(GraphFamily family, int n);

// |V| minus the number of connected components.
int rank(const SimpleGraph& g);

int component_count(const SimpleGraph& g);
bool is_connected_subset(const SimpleGraph& g, VertexSet s);

// A partition of V(G) into nonempty blocks; blocks are kept sorted by their
// minimum vertex.
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::vector<VertexSet> blocks);

  const std::vector<VertexSet>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  // Index of the block containing v, or -1.
  int block_of(int v) const;

  static VertexPartition singletons(int n);
  static VertexPartition whole(int n);
  static VertexPartition from_lists(const std::vector<std::vector<int>>& lists);

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<VertexSet> blocks_;
};

// Checks that c partitions V(g) into connected blocks; throws
// std::invalid_argument otherwise.
void require_composition(const SimpleGraph& g, const VertexPartition& c);

// G[C]: same vertex set, only the edges inside a block.
SimpleGraph induced_union(const SimpleGraph& g, const VertexPartition& c);

// G/C: block i of c becomes vertex i; blocks are adjacent iff some edge
// crosses between them.
SimpleGraph contract(const SimpleGraph& g, const VertexPartition& c);

// Calls visit once per composition (partition into connected blocks). Blocks
// are grown from the smallest unassigned vertex.
void for_each_composition(const SimpleGraph& g,
                          const std::function<void(const VertexPartition&)>& visit);
std::vector<VertexPartition> compositions(const SimpleGraph& g);
std::size_t composition_count(const SimpleGraph& g);

// Maximal biconnected subgraphs, each relabeled onto 0..k-1 in increasing
// vertex order. Bridges are two-vertex blocks; an isolated vertex is a
// one-vertex block.
std::vector<SimpleGraph> biconnected_components(const SimpleGraph& g);

// Deletion-contraction with a per-call memo keyed by a canonical form.
IntPoly chromatic_polynomial(const SimpleGraph& g);

// Canonical adjacency code used as the chromatic memo key: lexicographically
// minimal upper-triangle adjacency bits over all vertex orders that list
// vertices by nondecreasing degree. Returns nullopt when the search space
// exceeds `budget` orderings.
std::optional<std::uint64_t> canonical_code(const SimpleGraph& g,
                                            std::uint64_t budget = 200000);

}  // namespace matkl
