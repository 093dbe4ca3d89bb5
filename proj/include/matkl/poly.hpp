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

// Dense univariate polynomials with exact coefficients.
//
// Coefficients are stored in ascending order (index k holds the coefficient of
// t^k) and are always kept trimmed: the last stored coefficient is nonzero, and
// the zero polynomial stores nothing. Its degree is the explicit minus-infinity
// value of `Degree`.

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <type_traits>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace matkl {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised when an exact computation produces something that should be
// impossible for correct inputs (inexact division, non-integral coefficient,
// inconsistent linear system, ...).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Degree {
 public:
  explicit Degree(std::size_t d) : value_(d) {}
  static Degree minus_infinity() { return Degree(); }

  bool is_minus_infinity() const { return !value_.has_value(); }

  // Throws std::logic_error for the zero polynomial's degree.
  std::size_t value() const {
    if (!value_) throw std::logic_error("degree of the zero polynomial");
    return *value_;
  }

  friend bool operator==(const Degree&, const Degree&) = default;
  friend std::strong_ordering operator<=>(const Degree& a, const Degree& b) {
    if (a.is_minus_infinity() || b.is_minus_infinity())
      return b.is_minus_infinity() <=> a.is_minus_infinity();
    return *a.value_ <=> *b.value_;
  }

 private:
  Degree() = default;
  std::optional<std::size_t> value_;
};

template <typename Coeff>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Coeff> cs) : coeffs_(cs) { trim(); }
  explicit Poly(std::vector<Coeff> cs) : coeffs_(std::move(cs)) { trim(); }

  static Poly constant(const Coeff& c) { return Poly(std::vector<Coeff>{c}); }
  static Poly monomial(const Coeff& c, std::size_t k) {
    std::vector<Coeff> cs(k + 1);
    cs[k] = c;
    return Poly(std::move(cs));
  }
  static Poly x() { return monomial(Coeff(1), 1); }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  Degree degree() const {
    return is_zero() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }

  Coeff coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Coeff(0);
  }

  const Coeff& leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero");
    return coeffs_.back();
  }

  Poly& operator+=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator-=(const Poly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }

  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }

  Poly& operator*=(const Coeff& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Coeff& c) { return a *= c; }
  friend Poly operator*(const Coeff& c, Poly a) { return a *= c; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (sgn(a.coeffs_[i]) == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(out));
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& a : r.coeffs_) a = -a;
    return r;
  }

  friend bool operator==(const Poly&, const Poly&) = default;

  Poly derivative() const {
    if (coeffs_.size() <= 1) return Poly();
    std::vector<Coeff> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
      out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return Poly(std::move(out));
  }

  // Horner evaluation in the coefficient ring.
  Coeff eval(const Coeff& x) const {
    Coeff acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  std::string to_string(char var = 't') const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      const Coeff& c = coeffs_[k];
      if (sgn(c) == 0) continue;
      Coeff mag = abs(Coeff(c));
      if (s.empty()) {
        if (sgn(c) < 0) s += "-";
      } else {
        s += sgn(c) < 0 ? " - " : " + ";
      }
      bool unit = mag == 1;
      if (k == 0 || !unit) s += mag.get_str();
      if (k >= 1) {
        if (!unit) s += "*";
        s += var;
        if (k >= 2) s += "^" + std::to_string(k);
      }
    }
    return s;
  }

 private:
  void trim() {
    if constexpr (std::is_same_v<Coeff, mpq_class>) {
      for (auto& c : coeffs_) c.canonicalize();
    }
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

RatPoly to_rational(const IntPoly& p);

// Throws Error if some coefficient is not an integer.
IntPoly to_integer(const RatPoly& p);

template <typename Coeff>
Poly<Coeff> pow(const Poly<Coeff>& base, unsigned exponent) {
  Poly<Coeff> result = Poly<Coeff>::constant(Coeff(1));
  Poly<Coeff> b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent) b *= b;
  }
  return result;
}

// t^r * p(1/t). Requires r >= deg p (std::invalid_argument otherwise).
IntPoly reverse_scaled(const IntPoly& p, std::size_t r);

// den^clear_power * p(num/den). When clear_power < deg p the result is still
// returned if it happens to be a polynomial; otherwise Error is thrown.
RatPoly compose_rational(const RatPoly& p, const RatPoly& num, const RatPoly& den,
                         std::size_t clear_power);

Rational eval_at(const IntPoly& p, const Rational& x);

// Euclidean division over Q: a = q*b + r with deg r < deg b.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

// Monic gcd over Q; gcd(0, 0) = 0.
RatPoly gcd(RatPoly a, RatPoly b);

RatPoly monic(const RatPoly& p);

// a / b over Z[t]; Error unless b divides a with an integral quotient.
IntPoly divide_exact(const IntPoly& a, const IntPoly& b);

}  // namespace matkl
