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

// Truncated power series in u whose coefficients are polynomials in t over Q.

#pragma once

#include <string_view>
#include <vector>

#include "matkl/poly.hpp"

namespace matkl {

class TruncSeries {
 public:
  static constexpr int kMaxOrder = 64;

  // The zero series with coefficients of u^0..u^order.
  explicit TruncSeries(int order);
  // Coefficients beyond `order` are dropped; missing ones are zero.
  TruncSeries(int order, std::vector<RatPoly> coeffs);

  static TruncSeries constant(int order, const RatPoly& c);
  // The monomial u^k.
  static TruncSeries u_power(int order, int k);

  int order() const { return order_; }
  const RatPoly& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  const std::vector<RatPoly>& coeffs() const { return coeffs_; }

  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

 private:
  int order_;
  std::vector<RatPoly> coeffs_;
};

// Binary operations require equal orders (std::invalid_argument otherwise).
TruncSeries series_add(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
TruncSeries series_scalar(const TruncSeries& a, const RatPoly& c);
// Requires a nonzero rational constant term (Error otherwise).
TruncSeries series_inverse(const TruncSeries& a);
TruncSeries series_divide(const TruncSeries& a, const TruncSeries& b);
// Principal root with constant term 1; requires a's constant term to be 1.
TruncSeries series_sqrt(const TruncSeries& a);

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
TruncSeries operator/(const TruncSeries& a, const TruncSeries& b);

enum class GeneratingFunction { kl_fan, kl_wheel, kl_whirl, z_fan, z_wheel, z_whirl };

std::string_view to_string(GeneratingFunction g);

// Expands the closed-form generating function to order N (1 <= N <= 64).
// The coefficient of u^n is the polynomial of the family member of index n.
TruncSeries gf_expand(GeneratingFunction which, int order);

// Integer polynomial in t at u^k; Error when a coefficient is not integral.
IntPoly integer_coefficient(const TruncSeries& s, int k);

}  // namespace matkl
