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

#include "matkl/matroid.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace matkl {
namespace {

ElementSet bit(int i) { return ElementSet{1} << i; }

std::vector<int> members(ElementSet x) {
  std::vector<int> out;
  while (x != 0) {
    out.push_back(std::countr_zero(x));
    x &= x - 1;
  }
  return out;
}

// Maps a subset of positions 0..idx.size()-1 to the original element set.
ElementSet expand(ElementSet x, const std::vector<int>& idx) {
  ElementSet out = 0;
  while (x != 0) {
    out |= bit(idx[std::countr_zero(x)]);
    x &= x - 1;
  }
  return out;
}

int union_find_rank(int n_vertices, const std::vector<Edge>& edges, ElementSet x) {
  int parent[64];
  std::iota(parent, parent + n_vertices, 0);
  auto find = [&](int v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int r = 0;
  while (x != 0) {
    const Edge& e = edges[std::countr_zero(x)];
    x &= x - 1;
    int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      ++r;
    }
  }
  return r;
}

void require_sweepable(const RankOracleMatroid& m) {
  if (m.size() > RankOracleMatroid::kMaxSweepElements) {
    throw std::invalid_argument("flat sweep supports at most " +
                                std::to_string(RankOracleMatroid::kMaxSweepElements) +
                                " elements, got " + std::to_string(m.size()));
  }
}

void require_flat(const RankOracleMatroid& m, const Flat& f) {
  if ((f.elements & ~m.ground()) != 0) throw std::invalid_argument("flat outside ground set");
  if (!m.is_flat(f.elements)) throw std::invalid_argument("set is not a flat");
  if (m.rank(f.elements) != f.rank) throw std::invalid_argument("flat rank mismatch");
}

}  // namespace

RankOracleMatroid::RankOracleMatroid(int size, RankFunction rank_fn, std::vector<Edge> registry)
    : size_(size), rank_fn_(std::move(rank_fn)), registry_(std::move(registry)) {
  if (size < 0 || size > kMaxElements) throw std::invalid_argument("matroid size out of range");
  if (!rank_fn_) throw std::invalid_argument("missing rank function");
  if (!registry_.empty() && static_cast<int>(registry_.size()) != size) {
    throw std::invalid_argument("edge registry size mismatch");
  }
  rank_ = rank_fn_(ground());
}

ElementSet RankOracleMatroid::closure(ElementSet x) const {
  x &= ground();
  const int r = rank(x);
  ElementSet out = x;
  for (int e = 0; e < size_; ++e) {
    if ((x & bit(e)) == 0 && rank(x | bit(e)) == r) out |= bit(e);
  }
  return out;
}

RankOracleMatroid graphic_matroid(const SimpleGraph& g) {
  if (g.n_edges() > RankOracleMatroid::kMaxElements) {
    throw std::invalid_argument("graph has too many edges for a matroid oracle");
  }
  const int n = g.n_vertices();
  std::vector<Edge> edges = g.edges();
  return RankOracleMatroid(
      static_cast<int>(edges.size()),
      [n, edges](ElementSet x) { return union_find_rank(n, edges, x); }, edges);
}

ElementSet rim_elements(int n) {
  SimpleGraph w = make_family(GraphFamily::wheel, n);
  ElementSet rim = 0;
  for (std::size_t i = 0; i < w.edges().size(); ++i) {
    if (w.edges()[i].u != 0) rim |= bit(static_cast<int>(i));
  }
  return rim;
}

RankOracleMatroid whirl_matroid(int n) {
  if (n < 3) throw std::invalid_argument("whirl requires n >= 3");
  SimpleGraph w = make_family(GraphFamily::wheel, n);
  RankOracleMatroid base = graphic_matroid(w);
  const ElementSet rim = rim_elements(n);
  return RankOracleMatroid(
      base.size(), [base, rim](ElementSet x) { return base.rank(x) + (x == rim ? 1 : 0); },
      base.registry());
}

RankOracleMatroid boolean_matroid(int k) {
  return RankOracleMatroid(k, [](ElementSet x) { return std::popcount(x); });
}

RankOracleMatroid uniform_matroid(int r, int n) {
  if (r < 0 || r > n) throw std::invalid_argument("uniform matroid needs 0 <= r <= n");
  return RankOracleMatroid(n, [r](ElementSet x) { return std::min(r, std::popcount(x)); });
}

RankOracleMatroid direct_sum(const RankOracleMatroid& a, const RankOracleMatroid& b) {
  if (a.size() + b.size() > RankOracleMatroid::kMaxElements) {
    throw std::invalid_argument("direct sum too large");
  }
  const int shift = a.size();
  const ElementSet low = a.ground();
  std::vector<Edge> registry;
  if (!a.registry().empty() && !b.registry().empty()) {
    registry = a.registry();
    registry.insert(registry.end(), b.registry().begin(), b.registry().end());
  }
  return RankOracleMatroid(
      a.size() + b.size(),
      [a, b, shift, low](ElementSet x) { return a.rank(x & low) + b.rank(x >> shift); },
      std::move(registry));
}

std::vector<Flat> flats(const RankOracleMatroid& m, Execution exec) {
  if (exec == Execution::serial) return flats_reference(m);
  require_sweepable(m);
  const int n = m.size();
  const std::int64_t count = std::int64_t{1} << n;
  std::vector<std::int8_t> ranks(static_cast<std::size_t>(count));
  std::exception_ptr failure;

#pragma omp parallel for schedule(static)
  for (std::int64_t s = 0; s < count; ++s) {
    try {
      ranks[static_cast<std::size_t>(s)] =
          static_cast<std::int8_t>(m.rank(static_cast<ElementSet>(s)));
    } catch (...) {
#pragma omp critical(matkl_flats_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Flat> out;
#pragma omp parallel
  {
    std::vector<Flat> local;
#pragma omp for schedule(static) nowait
    for (std::int64_t s = 0; s < count; ++s) {
      const int r = ranks[static_cast<std::size_t>(s)];
      bool closed = true;
      for (int e = 0; e < n && closed; ++e) {
        const std::int64_t t = s | (std::int64_t{1} << e);
        if (t != s && ranks[static_cast<std::size_t>(t)] == r) closed = false;
      }
      if (closed) local.push_back({static_cast<ElementSet>(s), r});
    }
#pragma omp critical(matkl_flats_merge)
    out.insert(out.end(), local.begin(), local.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Flat> flats_reference(const RankOracleMatroid& m) {
  require_sweepable(m);
  std::set<Flat> found;
  const std::uint64_t count = std::uint64_t{1} << m.size();
  for (std::uint64_t s = 0; s < count; ++s) {
    ElementSet c = m.closure(static_cast<ElementSet>(s));
    found.insert({c, m.rank(c)});
  }
  return {found.begin(), found.end()};
}

RankOracleMatroid localization(const RankOracleMatroid& m, const Flat& f) {
  require_flat(m, f);
  std::vector<int> idx = members(f.elements);
  std::vector<Edge> registry;
  if (!m.registry().empty()) {
    for (int i : idx) registry.push_back(m.registry()[i]);
  }
  return RankOracleMatroid(
      static_cast<int>(idx.size()), [m, idx](ElementSet x) { return m.rank(expand(x, idx)); },
      std::move(registry));
}

RankOracleMatroid contraction(const RankOracleMatroid& m, const Flat& f) {
  require_flat(m, f);
  const ElementSet base = f.elements;
  const int base_rank = f.rank;
  std::vector<int> kept;
  for (int e = 0; e < m.size(); ++e) {
    if ((base & bit(e)) != 0) continue;
    if (m.rank(base | bit(e)) == base_rank) continue;
    bool parallel = false;
    for (int p : kept) {
      if (m.rank(base | bit(e) | bit(p)) == base_rank + 1) {
        parallel = true;
        break;
      }
    }
    if (!parallel) kept.push_back(e);
  }
  std::vector<Edge> registry;
  if (!m.registry().empty()) {
    for (int i : kept) registry.push_back(m.registry()[i]);
  }
  return RankOracleMatroid(
      static_cast<int>(kept.size()),
      [m, kept, base, base_rank](ElementSet x) {
        return m.rank(expand(x, kept) | base) - base_rank;
      },
      std::move(registry));
}

RankOracleMatroid simplification(const RankOracleMatroid& m) {
  return contraction(m, Flat{m.closure(0), 0});
}

IntPoly characteristic_polynomial(const RankOracleMatroid& m, Execution exec) {
  if (!m.is_loopless()) return IntPoly{};
  std::vector<Flat> fs = flats(m, exec);
  std::vector<Integer> mu(fs.size());
  IntPoly chi;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    Integer sum = 0;
    for (std::size_t j = 0; j < i; ++j) {
      if (fs[j].rank < fs[i].rank && (fs[j].elements & ~fs[i].elements) == 0) sum += mu[j];
    }
    mu[i] = i == 0 ? Integer(1) : Integer(-sum);
    chi += IntPoly::monomial(mu[i], static_cast<std::size_t>(m.rank() - fs[i].rank));
  }
  return chi;
}

}  // namespace matkl
