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

#include "matkl/poly.hpp"

#include <stdexcept>

namespace matkl {

RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> cs;
  cs.reserve(p.size());
  for (const auto& c : p.coeffs()) cs.emplace_back(c);
  return RatPoly(std::move(cs));
}

IntPoly to_integer(const RatPoly& p) {
  std::vector<Integer> cs;
  cs.reserve(p.size());
  for (const auto& c : p.coeffs()) {
    if (c.get_den() != 1) throw Error("non-integral coefficient " + c.get_str());
    cs.emplace_back(c.get_num());
  }
  return IntPoly(std::move(cs));
}

IntPoly reverse_scaled(const IntPoly& p, std::size_t r) {
  if (p.is_zero()) return p;
  if (p.degree().value() > r)
    throw std::invalid_argument("reverse_scaled: r is below the degree");
  std::vector<Integer> out(r + 1);
  for (std::size_t k = 0; k < p.size(); ++k) out[r - k] = p.coeffs()[k];
  return IntPoly(std::move(out));
}

RatPoly compose_rational(const RatPoly& p, const RatPoly& num, const RatPoly& den,
                         std::size_t clear_power) {
  if (den.is_zero()) throw std::invalid_argument("compose_rational: zero denominator");
  if (p.is_zero()) return p;
  const std::size_t d = p.degree().value();
  const std::size_t full = std::max(d, clear_power);
  // sum_k p_k num^k den^(full-k), then fix up the power of den.
  std::vector<RatPoly> num_pows{RatPoly::constant(1)};
  std::vector<RatPoly> den_pows{RatPoly::constant(1)};
  for (std::size_t k = 1; k <= full; ++k) {
    num_pows.push_back(num_pows.back() * num);
    den_pows.push_back(den_pows.back() * den);
  }
  RatPoly acc;
  for (std::size_t k = 0; k <= d; ++k) {
    if (sgn(p.coeffs()[k]) == 0) continue;
    acc += p.coeffs()[k] * (num_pows[k] * den_pows[full - k]);
  }
  if (full == clear_power) return acc;
  auto [q, r] = divmod(acc, den_pows[full - clear_power]);
  if (!r.is_zero()) throw Error("compose_rational: result is not a polynomial");
  return q;
}

Rational eval_at(const IntPoly& p, const Rational& x) {
  Rational acc(0);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("divmod by zero polynomial");
  if (a.is_zero() || a.degree() < b.degree()) return {RatPoly(), a};
  const std::size_t db = b.degree().value();
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(rem.size() - db);
  const Rational& lead = b.leading();
  for (std::size_t i = rem.size(); i-- > db;) {
    if (sgn(rem[i]) == 0) continue;
    Rational f = rem[i] / lead;
    quot[i - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return p * inv;
}

RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

IntPoly divide_exact(const IntPoly& a, const IntPoly& b) {
  auto [q, r] = divmod(to_rational(a), to_rational(b));
  if (!r.is_zero()) throw Error("divide_exact: nonzero remainder");
  return to_integer(q);
}

}  // namespace matkl
