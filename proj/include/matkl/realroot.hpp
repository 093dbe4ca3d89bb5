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

// Exact real-root certification over Q: Sturm sequences, squarefree
// decomposition, root isolation and interlacing. Infinite interval endpoints
// are represented by std::nullopt and handled through leading-term signs.

#pragma once

#include <optional>
#include <vector>

#include "matkl/poly.hpp"

namespace matkl {

using Bound = std::optional<Rational>;

class SturmChain {
 public:
  // Chain of the squarefree part of p (std::invalid_argument if p is zero).
  explicit SturmChain(const RatPoly& p);

  const std::vector<RatPoly>& polys() const { return polys_; }
  const RatPoly& squarefree_part() const { return squarefree_; }

  // Sign variations at x (nullopt with `negative` picks -inf, else +inf).
  int variations_at(const Rational& x) const;
  int variations_at_infinity(bool negative) const;

  // Distinct real roots in (lo, hi]; lo = nullopt means -inf, hi = nullopt +inf.
  int count(const Bound& lo, const Bound& hi) const;

 private:
  RatPoly squarefree_;
  std::vector<RatPoly> polys_;
};

// Distinct real roots of p in (lo, hi]. Requires p nonzero.
int count_real_roots(const IntPoly& p, const Bound& lo, const Bound& hi);
int count_real_roots(const RatPoly& p, const Bound& lo, const Bound& hi);

// p = c * prod_i factors[i]^(i+1) with monic squarefree, pairwise coprime
// factors (some may be 1).
struct SquarefreeDecomposition {
  Rational content;
  std::vector<RatPoly> factors;
};
SquarefreeDecomposition squarefree_decomposition(const RatPoly& p);

// A real root of a squarefree polynomial, isolated in (lo, hi].
struct IsolatedRoot {
  RatPoly squarefree;
  Rational lo;
  Rational hi;
  int multiplicity = 1;
};

// Distinct real roots in increasing order, each with its multiplicity.
std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p);

struct RootCertificate {
  bool holds = false;
  std::vector<IsolatedRoot> roots;
};

// Every root (with multiplicity) is real.
bool real_rooted(const IntPoly& p);
bool real_rooted(const RatPoly& p);

// Every root is real and strictly negative; a nonzero constant passes.
// Requires p nonzero.
RootCertificate all_zeros_negative(const IntPoly& p);
RootCertificate all_zeros_negative(const RatPoly& p);

// Exact comparison of two isolated roots (-1, 0, 1). Intervals are refined
// in place.
int compare_roots(IsolatedRoot& a, IsolatedRoot& b);

// g is an interleaver of f: with roots sorted decreasingly as u_1 >= u_2 >= ...
// for f and v_1 >= v_2 >= ... for g, v_i <= u_i and u_{i+1} <= v_i for every
// root v_i of g. Requires both real-rooted with positive leading coefficients
// and deg f - deg g in {0, 1} (std::invalid_argument otherwise).
bool interleaves(const IntPoly& g, const IntPoly& f);

// sum_k gamma_k C(n, k) t^k is real-rooted with all nonzero roots of one
// sign. Zero and constant polynomials pass. Requires gamma.size() == n + 1.
bool n_sequence_check(const std::vector<Rational>& gamma, int n);

// Coefficients of the polynomial are log-concave with no internal zeros.
bool log_concave_no_internal_zeros(const IntPoly& p);

// N_n(t) = (1+t)^(n-1) P_{F_n}(t/(1+t)^2), and Z of F_{n-1} equals N_n
// (n >= 2). Requires n >= 1.
IntPoly narayana(int n);
bool verify_narayana_identity(int n);

// Lucas polynomials L_0 = 2, L_1 = x, and Fibonacci polynomials F_1 = 1,
// F_2 = x, both by the three-term recursion.
IntPoly lucas_polynomial(int n);
IntPoly fibonacci_polynomial(int n);

// f_n = sum c_k t^k (c_k from hadamard_wheel_coeff) and
// g_n = sum C(n-k-1, k) t^k agree termwise with L_{n-1} and F_n read in
// reverse, the quoted closed coefficient formulas agree with the recursion,
// and f_n, g_n have only negative zeros. Requires n >= 3.
bool verify_lucas_fibonacci(int n);

// h_n(t) = sum ((1+k)n^2 + (1-2k-k^2)n + 2k^2) C(n,k) t^k equals
// n((n+1)t^2 + (n^2-n+4)t + n+1)(1+t)^(n-2); the weights reproduce the wheel
// Z-polynomial; the quadratic's discriminant equals (n-1)(n-2)(n^2+n+6) > 0.
// Requires n >= 3.
bool verify_wheel_z_quadratic(int n);

// [t^k] P_{W_n} = a_k b_k c_k for every k. Requires n >= 3.
bool verify_hadamard_factorization(int n);

// The wheel n-sequence check: sum_k a_k C(m, k) t^k with
// m = floor((n-1)/2) and a_k from hadamard_wheel_coeff.
bool verify_wheel_n_sequence(int n);

}  // namespace matkl
