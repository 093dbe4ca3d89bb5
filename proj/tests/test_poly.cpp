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

#include "doctest.h"
#include "matkl/poly.hpp"
#include "test_support.hpp"

using namespace matkl;

TEST_CASE("ring arithmetic examples") {
  const IntPoly one_t{1, 1};
  CHECK(one_t * one_t == IntPoly{1, 2, 1});
  CHECK((IntPoly{1, 6, 2} * IntPoly{}).is_zero());
  CHECK(IntPoly{1, 6, 2} * IntPoly{1} == IntPoly{1, 6, 2});
  CHECK(IntPoly{1, 2} - IntPoly{1, 2} == IntPoly{});
  CHECK(IntPoly{0, 0, 0}.is_zero());
}

TEST_CASE("degree of the zero polynomial is minus infinity") {
  CHECK(IntPoly{}.degree().is_minus_infinity());
  CHECK(IntPoly{}.degree() < Degree(0));
  CHECK(IntPoly{5}.degree() == Degree(0));
  CHECK_THROWS_AS(IntPoly{}.degree().value(), std::logic_error);
  CHECK_THROWS_AS(IntPoly{}.leading(), std::logic_error);
}

TEST_CASE("ring axioms on random polynomials") {
  auto rng = testing::make_rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const IntPoly a = testing::random_int_poly(rng, 5, 9);
    const IntPoly b = testing::random_int_poly(rng, 5, 9);
    const IntPoly c = testing::random_int_poly(rng, 5, 9);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == IntPoly{});
  }
}

TEST_CASE("ring axioms over the rationals") {
  auto rng = testing::make_rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const RatPoly a = testing::random_rat_poly(rng, 4, 7);
    const RatPoly b = testing::random_rat_poly(rng, 4, 7);
    const RatPoly c = testing::random_rat_poly(rng, 4, 7);
    CHECK(a * (b + c) == a * b + a * c);
    if (!b.is_zero()) {
      const auto [q, r] = divmod(a, b);
      CHECK(q * b + r == a);
      CHECK(r.degree() < b.degree());
    }
  }
}

TEST_CASE("reverse_scaled") {
  CHECK(reverse_scaled(IntPoly{1, 1}, 3) == IntPoly{0, 0, 1, 1});
  CHECK(reverse_scaled(IntPoly{1}, 0) == IntPoly{1});
  CHECK(reverse_scaled(IntPoly{1, 5}, 4) == IntPoly{0, 0, 0, 5, 1});
  CHECK_THROWS_AS(reverse_scaled(IntPoly{1, 1, 1}, 1), std::invalid_argument);
  CHECK(reverse_scaled(IntPoly{}, 0) == IntPoly{});
}

TEST_CASE("reverse_scaled is an involution when the constant term is nonzero") {
  auto rng = testing::make_rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    IntPoly p = testing::random_int_poly(rng, 6, 9);
    if (p.is_zero() || sgn(p.coeff(0)) == 0) continue;
    const std::size_t r = p.degree().value() + static_cast<std::size_t>(testing::uniform_int(rng, 0, 3));
    CHECK(reverse_scaled(reverse_scaled(p, r), r) == p);
  }
}

TEST_CASE("compose_rational follows den^clear_power * p(num/den)") {
  const RatPoly t{0, 1};
  const RatPoly sq = RatPoly{1, 1} * RatPoly{1, 1};
  CHECK(compose_rational(RatPoly{1, 1}, t, sq, 1) == RatPoly{1, 3, 1});
  const RatPoly expected = pow(RatPoly{1, 1}, 4) + t * sq;
  CHECK(compose_rational(RatPoly{1, 1}, t, sq, 2) == expected);
  CHECK(compose_rational(RatPoly{1}, RatPoly{3, 4}, RatPoly{5, 0, 2}, 0) == RatPoly{1});
  CHECK(compose_rational(t, t, RatPoly{1}, 1) == t);
}

TEST_CASE("compose_rational with num = t and den = 1 is the identity") {
  auto rng = testing::make_rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const RatPoly p = testing::random_rat_poly(rng, 6, 9);
    if (p.is_zero()) continue;
    CHECK(compose_rational(p, RatPoly{0, 1}, RatPoly{1}, p.degree().value()) == p);
  }
}

TEST_CASE("compose_rational rejects non-polynomial results") {
  CHECK_THROWS_AS(compose_rational(RatPoly{0, 0, 1}, RatPoly{0, 1}, RatPoly{1, 1}, 1), Error);
}

TEST_CASE("eval_at") {
  CHECK(eval_at(IntPoly{1, 6, 2}, Rational(1)) == 9);
  CHECK(eval_at(IntPoly{7, 6, 2}, Rational(0)) == 7);
  CHECK(eval_at(IntPoly{1, 3, 1}, Rational(1)) == 5);
  CHECK(eval_at(IntPoly{0, 2}, Rational(1, 3)) == Rational(2, 3));
}

TEST_CASE("exact division and gcd") {
  const IntPoly a{1, 1};
  const IntPoly b{2, 3, 1};
  CHECK(divide_exact(a * b, b) == a);
  CHECK_THROWS_AS(divide_exact(IntPoly{1, 2}, IntPoly{0, 2}), Error);
  CHECK_THROWS_AS(divide_exact(IntPoly{1, 1}, IntPoly{2}), Error);
  CHECK(gcd(to_rational(b), to_rational(IntPoly{3, 3})) == RatPoly{1, 1});
  CHECK(gcd(RatPoly{}, RatPoly{}) == RatPoly{});
  CHECK(to_integer(RatPoly{Rational(4, 2), 1}) == IntPoly{2, 1});
  CHECK_THROWS_AS(to_integer(RatPoly{Rational(1, 2)}), Error);
}

TEST_CASE("to_string") {
  CHECK(IntPoly{1, 6, 2}.to_string() == "1 + 6*t + 2*t^2");
  CHECK(IntPoly{}.to_string() == "0");
  CHECK(IntPoly{0, -1}.to_string() == "-t");
}
