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

// Kazhdan-Lusztig and Z-polynomials of matroids: the brute-force solver over
// lattices of flats, closed forms for fans, squares of paths, wheels and
// whirls, and the P-recursive recurrences for fans, wheels and whirls.

#pragma once

#include <atomic>
#include <cstddef>
#include <memory>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "matkl/graph.hpp"
#include "matkl/lattice.hpp"
#include "matkl/matroid.hpp"
#include "matkl/parallel.hpp"
#include "matkl/poly.hpp"

namespace matkl {

enum class Family { fan, square_of_path, wheel, whirl, generic };
enum class Method { brute, closed, recurrence };

std::string_view to_string(Family f);
std::string_view to_string(Method m);
// Accepts "fan", "square" (or "square_of_path"), "wheel", "whirl".
Family parse_family(std::string_view s);
Method parse_method(std::string_view s);

struct KlResult {
  Family family = Family::generic;
  int n = 0;
  Method method = Method::brute;
  IntPoly poly;
};

struct ZResult {
  Family family = Family::generic;
  int n = 0;
  Method method = Method::brute;
  IntPoly poly;
};

// Memoized solver for the defining recursion on lattices of flats. Lattices
// are shared across the recursion up to isomorphism: candidates with equal
// fingerprints are confirmed by an exact isomorphism test when both have at
// most kIsomorphismLimit flats, and otherwise only by syntactic equality.
// Safe to call from several threads.
class KlEngine {
 public:
  static constexpr std::size_t kIsomorphismLimit = 2000;

  struct Stats {
    std::size_t hits = 0;
    std::size_t misses = 0;
    std::size_t entries = 0;
  };

  explicit KlEngine(Execution exec = Execution::parallel) : exec_(exec) {}

  IntPoly kl(const FlatLattice& lattice);
  IntPoly z(const FlatLattice& lattice);
  Stats stats() const;
  Execution execution() const { return exec_; }

 private:
  struct Entry {
    LatticeFingerprint fp;
    FlatLattice lattice;
    IntPoly poly;
  };

  IntPoly lookup_or_solve(const FlatLattice& lattice);
  IntPoly solve(const FlatLattice& lattice);

  Execution exec_;
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::size_t, std::vector<std::shared_ptr<const Entry>>> memo_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
};

// P_M for a loopless matroid (std::invalid_argument if m has loops). Throws
// Error if the recursion produces inconsistent equations.
IntPoly kl_poly(const RankOracleMatroid& m, Execution exec = Execution::parallel);
IntPoly z_poly(const RankOracleMatroid& m, Execution exec = Execution::parallel);

// Checks t^rk P_M(1/t) = sum_F chi(M_F) P(M^F), rebuilding every
// localization and contraction from the rank oracle of m.
bool defining_identity_holds(const RankOracleMatroid& m, const IntPoly& p,
                             Execution exec = Execution::parallel);

// Fan and square of path: n >= 1. Wheel and whirl: n >= 3.
IntPoly kl_closed(Family family, int n);
// Fan: n >= 1. Wheel and whirl: n >= 3. Square of path is not covered.
IntPoly z_closed(Family family, int n);
// The wheel closed form evaluated without the n >= 3 guard (n >= 2). Throws
// Error when a coefficient fails to be integral.
IntPoly wheel_formula_unchecked(int n);

// Fan n >= 0, wheel n >= 2, whirl n >= 1.
IntPoly kl_recurrence(Family family, int n);
// Values for every n from the family's first index up to max_n.
std::vector<IntPoly> kl_recurrence_table(Family family, int max_n);

struct HadamardCoefficients {
  Integer a;
  Rational b;
  Rational c;
};
// n >= 3 and 0 <= k <= (n-1)/2.
HadamardCoefficients hadamard_wheel_coeff(int n, int k);

// Product of the KL polynomials of the biconnected components of g.
IntPoly multiplicative_kl(const SimpleGraph& g, Execution exec = Execution::parallel);

// Graphic matroid of the family graph (fan, square_of_path, wheel) or the
// whirl W^n.
RankOracleMatroid family_matroid(Family family, int n);

// Smallest n for which the family matroid is available.
int family_min_n(Family family);

}  // namespace matkl
