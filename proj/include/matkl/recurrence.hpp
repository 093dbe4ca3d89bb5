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

// Linear recurrences with coefficients polynomial in (n, t), stored as text in
// the usual computer-algebra output syntax and parsed into monomial tables.

#pragma once

#include <string>
#include <vector>

#include "matkl/kl.hpp"
#include "matkl/poly.hpp"

namespace matkl {

struct Monomial {
  Integer coeff;
  int n_power = 0;
  int t_power = 0;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Expanded polynomial in n and t; monomials sorted by (n_power, t_power)
// with nonzero coefficients.
using Bivariate = std::vector<Monomial>;

// Parses products and sums such as "(3+n) t (-1+4 t)" or "n^2 t^3".
Bivariate parse_bivariate(const std::string& text);

// Substitutes n and returns a polynomial in t.
IntPoly evaluate_at_n(const Bivariate& p, long n);

// sum |c| * (1 + n_power + t_power) over all monomials.
Integer bivariate_checksum(const Bivariate& p);

struct RecurrenceTerm {
  int shift = 0;
  Bivariate coefficient;
};

// sum_i lhs_i(n) a[n + shift_i] = sum_j rhs_j(n) a[n + shift_j].
struct Recurrence {
  Family family = Family::fan;
  int offset = 0;  // a[k] is the family member with index k + offset
  std::vector<RecurrenceTerm> lhs;
  std::vector<RecurrenceTerm> rhs;
  std::vector<IntPoly> seeds;
  int order() const { return static_cast<int>(seeds.size()); }
};

// Fan, wheel or whirl (std::invalid_argument otherwise).
const Recurrence& family_recurrence(Family family);

// a[0..count-1] of the recurrence; Error if a step divides inexactly.
std::vector<IntPoly> run_recurrence(const Recurrence& rec, int count);

}  // namespace matkl
