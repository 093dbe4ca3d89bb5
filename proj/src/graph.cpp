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

#include "matkl/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace matkl {
namespace {

VertexSet bit(int v) { return VertexSet{1} << v; }

int lowest(VertexSet s) { return std::countr_zero(s); }

}  // namespace

SimpleGraph::SimpleGraph(int n_vertices, std::vector<Edge> edges)
    : n_(n_vertices), adj_(static_cast<std::size_t>(std::max(n_vertices, 0)), 0) {
  if (n_vertices < 0 || n_vertices > kMaxVertices)
    throw std::invalid_argument("vertex count out of range");
  for (auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n_ || e.v >= n_)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("parallel edge");
  for (const auto& e : edges) {
    adj_[e.u] |= bit(e.v);
    adj_[e.v] |= bit(e.u);
  }
  edges_ = std::move(edges);
}

VertexSet SimpleGraph::all_vertices() const {
  return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1;
}

SimpleGraph make_family(GraphFamily family, int n) {
  std::vector<Edge> e;
  switch (family) {
    case GraphFamily::path:
      if (n < 1 || n > 64) throw std::invalid_argument("path needs 1 <= n <= 64");
      for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
      return SimpleGraph(n, e);
    case GraphFamily::cycle:
      if (n < 3 || n > 64) throw std::invalid_argument("cycle needs 3 <= n <= 64");
      for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
      return SimpleGraph(n, e);
    case GraphFamily::fan:
      if (n < 1 || n > 63) throw std::invalid_argument("fan needs 1 <= n <= 63");
      for (int i = 1; i <= n; ++i) e.push_back({0, i});
      for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
      return SimpleGraph(n + 1, e);
    case GraphFamily::wheel:
      if (n < 3 || n > 63) throw std::invalid_argument("wheel needs 3 <= n <= 63");
      for (int i = 1; i <= n; ++i) e.push_back({0, i});
      for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
      e.push_back({1, n});
      return SimpleGraph(n + 1, e);
    case GraphFamily::square_of_path:
      if (n < 1 || n > 63) throw std::invalid_argument("square_of_path needs 1 <= n <= 63");
      for (int i = 0; i < n; ++i) e.push_back({i, i + 1});
      for (int i = 0; i + 2 <= n; ++i) e.push_back({i, i + 2});
      return SimpleGraph(n + 1, e);
  }
  throw std::invalid_argument("unknown family");
}

namespace {

// Vertices reachable from `start` using only vertices of `within`.
VertexSet reach(const SimpleGraph& g, int start, VertexSet within) {
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier) {
    int v = lowest(frontier);
    frontier &= frontier - 1;
    VertexSet next = g.neighbors(v) & within & ~seen;
    seen |= next;
    frontier |= next;
  }
  return seen;
}

}  // namespace

bool is_connected_subset(const SimpleGraph& g, VertexSet s) {
  if (s == 0) return false;
  return reach(g, lowest(s), s) == s;
}

int component_count(const SimpleGraph& g) {
  VertexSet left = g.all_vertices();
  int count = 0;
  while (left) {
    left &= ~reach(g, lowest(left), g.all_vertices());
    ++count;
  }
  return count;
}

int rank(const SimpleGraph& g) { return g.n_vertices() - component_count(g); }

VertexPartition::VertexPartition(std::vector<VertexSet> blocks) : blocks_(std::move(blocks)) {
  VertexSet seen = 0;
  for (VertexSet b : blocks_) {
    if (b == 0) throw std::invalid_argument("empty block");
    if (seen & b) throw std::invalid_argument("overlapping blocks");
    seen |= b;
  }
  std::sort(blocks_.begin(), blocks_.end(),
            [](VertexSet a, VertexSet b) { return lowest(a) < lowest(b); });
}

int VertexPartition::block_of(int v) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if ((blocks_[i] >> v) & 1u) return static_cast<int>(i);
  return -1;
}

VertexPartition VertexPartition::singletons(int n) {
  std::vector<VertexSet> b;
  for (int v = 0; v < n; ++v) b.push_back(bit(v));
  return VertexPartition(std::move(b));
}

VertexPartition VertexPartition::whole(int n) {
  if (n == 0) return VertexPartition();
  return VertexPartition({n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1});
}

VertexPartition VertexPartition::from_lists(const std::vector<std::vector<int>>& lists) {
  std::vector<VertexSet> b;
  for (const auto& l : lists) {
    VertexSet s = 0;
    for (int v : l) {
      if (v < 0 || v >= 64) throw std::invalid_argument("vertex out of range");
      s |= bit(v);
    }
    b.push_back(s);
  }
  return VertexPartition(std::move(b));
}

void require_composition(const SimpleGraph& g, const VertexPartition& c) {
  VertexSet covered = 0;
  for (VertexSet b : c.blocks()) {
    if (b & ~g.all_vertices()) throw std::invalid_argument("block outside the vertex set");
    if (!is_connected_subset(g, b)) throw std::invalid_argument("block is not connected");
    covered |= b;
  }
  if (covered != g.all_vertices()) throw std::invalid_argument("partition does not cover V(G)");
}

SimpleGraph induced_union(const SimpleGraph& g, const VertexPartition& c) {
  require_composition(g, c);
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (c.block_of(e.u) == c.block_of(e.v)) kept.push_back(e);
  return SimpleGraph(g.n_vertices(), std::move(kept));
}

SimpleGraph contract(const SimpleGraph& g, const VertexPartition& c) {
  require_composition(g, c);
  std::vector<int> block(g.n_vertices());
  for (int v = 0; v < g.n_vertices(); ++v) block[v] = c.block_of(v);
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    int a = block[e.u], b = block[e.v];
    if (a == b) continue;
    out.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return SimpleGraph(static_cast<int>(c.size()), std::move(out));
}

namespace {

// Each connected S with anchor <= S <= within is produced exactly once: a
// branch on v excludes the siblings that precede v.
void grow_connected(const SimpleGraph& g, VertexSet s, VertexSet excluded, VertexSet within,
                    const std::function<void(VertexSet)>& emit) {
  emit(s);
  VertexSet boundary = 0;
  for (VertexSet it = s; it; it &= it - 1) boundary |= g.neighbors(lowest(it));
  boundary &= within & ~s & ~excluded;
  VertexSet passed = 0;
  for (VertexSet it = boundary; it; it &= it - 1) {
    int v = lowest(it);
    grow_connected(g, s | bit(v), excluded | passed, within, emit);
    passed |= bit(v);
  }
}

void partition_rest(const SimpleGraph& g, VertexSet unassigned, std::vector<VertexSet>& blocks,
                    const std::function<void(const VertexPartition&)>& visit) {
  if (unassigned == 0) {
    visit(VertexPartition(blocks));
    return;
  }
  int anchor = lowest(unassigned);
  grow_connected(g, bit(anchor), 0, unassigned, [&](VertexSet block) {
    blocks.push_back(block);
    partition_rest(g, unassigned & ~block, blocks, visit);
    blocks.pop_back();
  });
}

}  // namespace

void for_each_composition(const SimpleGraph& g,
                          const std::function<void(const VertexPartition&)>& visit) {
  std::vector<VertexSet> blocks;
  partition_rest(g, g.all_vertices(), blocks, visit);
}

std::vector<VertexPartition> compositions(const SimpleGraph& g) {
  std::vector<VertexPartition> out;
  for_each_composition(g, [&](const VertexPartition& c) { out.push_back(c); });
  return out;
}

std::size_t composition_count(const SimpleGraph& g) {
  std::size_t n = 0;
  for_each_composition(g, [&](const VertexPartition&) { ++n; });
  return n;
}

namespace {

SimpleGraph induced_relabeled(const SimpleGraph& g, VertexSet s) {
  std::vector<int> index(g.n_vertices(), -1);
  int k = 0;
  for (VertexSet it = s; it; it &= it - 1) index[lowest(it)] = k++;
  std::vector<Edge> e;
  for (const auto& edge : g.edges())
    if (index[edge.u] >= 0 && index[edge.v] >= 0) e.push_back({index[edge.u], index[edge.v]});
  return SimpleGraph(k, std::move(e));
}

struct BlockFinder {
  const SimpleGraph& g;
  std::vector<int> disc, low;
  std::vector<Edge> stack;
  std::vector<VertexSet> blocks;
  int timer = 0;

  void visit(int u, int parent) {
    disc[u] = low[u] = ++timer;
    for (VertexSet it = g.neighbors(u); it; it &= it - 1) {
      int w = lowest(it);
      if (disc[w] == 0) {
        stack.push_back({u, w});
        visit(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          VertexSet b = 0;
          Edge e;
          do {
            e = stack.back();
            stack.pop_back();
            b |= bit(e.u) | bit(e.v);
          } while (!(e.u == u && e.v == w));
          blocks.push_back(b);
        }
      } else if (w != parent && disc[w] < disc[u]) {
        stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    }
  }
};

}  // namespace

std::vector<SimpleGraph> biconnected_components(const SimpleGraph& g) {
  BlockFinder f{g, std::vector<int>(g.n_vertices(), 0), std::vector<int>(g.n_vertices(), 0), {}, {}};
  for (int v = 0; v < g.n_vertices(); ++v) {
    if (f.disc[v] != 0) continue;
    if (g.neighbors(v) == 0) {
      f.disc[v] = ++f.timer;
      f.blocks.push_back(bit(v));
      continue;
    }
    f.visit(v, -1);
  }
  std::sort(f.blocks.begin(), f.blocks.end());
  std::vector<SimpleGraph> out;
  for (VertexSet b : f.blocks) out.push_back(induced_relabeled(g, b));
  return out;
}

// ---------------------------------------------------------------------------
// Chromatic polynomial.

std::optional<std::uint64_t> canonical_code(const SimpleGraph& g, std::uint64_t budget) {
  const int n = g.n_vertices();
  if (n > 11) return std::nullopt;
  // One round of degree refinement; the cell order only depends on the
  // invariants, so the minimum below is isomorphism invariant.
  std::vector<std::vector<int>> invariant(n);
  for (int v = 0; v < n; ++v) {
    invariant[v].push_back(std::popcount(g.neighbors(v)));
    std::vector<int> nd;
    for (VertexSet it = g.neighbors(v); it; it &= it - 1)
      nd.push_back(std::popcount(g.neighbors(lowest(it))));
    std::sort(nd.begin(), nd.end());
    invariant[v].insert(invariant[v].end(), nd.begin(), nd.end());
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return std::tie(invariant[a], a) < std::tie(invariant[b], b); });
  std::vector<std::pair<int, int>> cells;  // [begin, end) in `order`
  std::uint64_t space = 1;
  for (int i = 0; i < n;) {
    int j = i;
    while (j < n && invariant[order[j]] == invariant[order[i]]) ++j;
    cells.push_back({i, j});
    for (int k = 2; k <= j - i; ++k) {
      space *= static_cast<std::uint64_t>(k);
      if (space > budget) return std::nullopt;
    }
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto encode = [&]() {
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) code = (code << 1) | (g.adjacent(order[i], order[j]) ? 1u : 0u);
    best = std::min(best, code);
  };
  // Enumerate the product of per-cell permutations.
  std::function<void(std::size_t)> walk = [&](std::size_t c) {
    if (c == cells.size()) {
      encode();
      return;
    }
    auto [b, e] = cells[c];
    std::sort(order.begin() + b, order.begin() + e);
    do {
      walk(c + 1);
    } while (std::next_permutation(order.begin() + b, order.begin() + e));
  };
  walk(0);
  return best;
}

namespace {

struct ChromaticKey {
  int n;
  bool canonical;
  std::uint64_t code;                 // canonical code
  std::vector<Edge> edges;            // syntactic fallback
  friend auto operator<=>(const ChromaticKey&, const ChromaticKey&) = default;
};

SimpleGraph remove_vertex(const SimpleGraph& g, int v) {
  std::vector<Edge> e;
  for (const auto& edge : g.edges()) {
    if (edge.u == v || edge.v == v) continue;
    e.push_back({edge.u > v ? edge.u - 1 : edge.u, edge.v > v ? edge.v - 1 : edge.v});
  }
  return SimpleGraph(g.n_vertices() - 1, std::move(e));
}

SimpleGraph delete_edge(const SimpleGraph& g, const Edge& gone) {
  std::vector<Edge> e;
  for (const auto& edge : g.edges())
    if (!(edge == gone)) e.push_back(edge);
  return SimpleGraph(g.n_vertices(), std::move(e));
}

// Merges edge.v into edge.u and drops edge.v's label.
SimpleGraph contract_edge(const SimpleGraph& g, const Edge& merged) {
  auto relabel = [&](int x) {
    if (x == merged.v) x = merged.u;
    return x > merged.v ? x - 1 : x;
  };
  std::vector<Edge> e;
  for (const auto& edge : g.edges()) {
    int a = relabel(edge.u), b = relabel(edge.v);
    if (a == b) continue;
    e.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
  return SimpleGraph(g.n_vertices() - 1, std::move(e));
}

class ChromaticSolver {
 public:
  IntPoly solve(const SimpleGraph& g) {
    const int n = g.n_vertices();
    const IntPoly t = IntPoly::x();
    if (g.n_edges() == 0) return pow(t, static_cast<unsigned>(n));
    if (2 * g.n_edges() == static_cast<std::size_t>(n) * (n - 1)) {
      IntPoly falling = IntPoly::constant(1);
      for (int i = 0; i < n; ++i) falling *= IntPoly{-i, 1};
      return falling;
    }
    for (int v = 0; v < n; ++v) {
      int d = std::popcount(g.neighbors(v));
      if (d == 0) return t * solve(remove_vertex(g, v));
      if (d == 1) return IntPoly{-1, 1} * solve(remove_vertex(g, v));
    }
    ChromaticKey key{n, false, 0, {}};
    if (auto code = canonical_code(g)) {
      key.canonical = true;
      key.code = *code;
    } else {
      key.edges = g.edges();
    }
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // Branch on an edge at a vertex of maximum degree.
    int hub = 0;
    for (int v = 1; v < n; ++v)
      if (std::popcount(g.neighbors(v)) > std::popcount(g.neighbors(hub))) hub = v;
    int other = lowest(g.neighbors(hub));
    Edge e{std::min(hub, other), std::max(hub, other)};
    IntPoly result = solve(delete_edge(g, e)) - solve(contract_edge(g, e));
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  std::map<ChromaticKey, IntPoly> memo_;
};

}  // namespace

IntPoly chromatic_polynomial(const SimpleGraph& g) {
  ChromaticSolver solver;
  return solver.solve(g);
}

}  // namespace matkl
