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

#include "matkl/series.hpp"

#include <stdexcept>
#include <string>

namespace matkl {
namespace {

void require_order(int order) {
  if (order < 0 || order > TruncSeries::kMaxOrder) {
    throw std::invalid_argument("series order must lie in [0, " +
                                std::to_string(TruncSeries::kMaxOrder) + "]");
  }
}

void require_same_order(const TruncSeries& a, const TruncSeries& b) {
  if (a.order() != b.order()) {
    throw std::invalid_argument("series orders differ: " + std::to_string(a.order()) + " vs " +
                                std::to_string(b.order()));
  }
}

bool is_constant(const RatPoly& p) { return p.degree() <= Degree(0); }

RatPoly t_poly(std::initializer_list<Rational> cs) { return RatPoly(cs); }

// Series of a polynomial in u with t-polynomial coefficients.
TruncSeries u_poly(int order, std::vector<RatPoly> cs) { return TruncSeries(order, std::move(cs)); }

}  // namespace

TruncSeries::TruncSeries(int order) : order_(order) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncSeries::TruncSeries(int order, std::vector<RatPoly> coeffs) : TruncSeries(order) {
  for (std::size_t k = 0; k < coeffs.size() && k < coeffs_.size(); ++k) {
    coeffs_[k] = std::move(coeffs[k]);
  }
}

TruncSeries TruncSeries::constant(int order, const RatPoly& c) { return TruncSeries(order, {c}); }

TruncSeries TruncSeries::u_power(int order, int k) {
  TruncSeries s(order);
  if (k < 0) throw std::invalid_argument("negative power of u");
  if (k <= order) s.coeffs_[static_cast<std::size_t>(k)] = RatPoly{1};
  return s;
}

TruncSeries series_add(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  std::vector<RatPoly> out = a.coeffs();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += b.coeffs()[k];
  return TruncSeries(a.order(), std::move(out));
}

TruncSeries series_sub(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  std::vector<RatPoly> out = a.coeffs();
  for (std::size_t k = 0; k < out.size(); ++k) out[k] -= b.coeffs()[k];
  return TruncSeries(a.order(), std::move(out));
}

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  require_same_order(a, b);
  const std::size_t n = a.coeffs().size();
  std::vector<RatPoly> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return TruncSeries(a.order(), std::move(out));
}

TruncSeries series_scalar(const TruncSeries& a, const RatPoly& c) {
  std::vector<RatPoly> out = a.coeffs();
  for (auto& x : out) x *= c;
  return TruncSeries(a.order(), std::move(out));
}

TruncSeries series_inverse(const TruncSeries& a) {
  const RatPoly& a0 = a.coeff(0);
  if (a0.is_zero() || !is_constant(a0)) {
    throw Error("series inverse needs a nonzero rational constant term");
  }
  const Rational inv0 = Rational(1) / a0.coeff(0);
  const std::size_t n = a.coeffs().size();
  std::vector<RatPoly> b(n);
  b[0] = RatPoly{inv0};
  for (std::size_t k = 1; k < n; ++k) {
    RatPoly acc;
    for (std::size_t i = 1; i <= k; ++i) acc += a.coeffs()[i] * b[k - i];
    b[k] = acc * Rational(-inv0);
  }
  return TruncSeries(a.order(), std::move(b));
}

TruncSeries series_divide(const TruncSeries& a, const TruncSeries& b) {
  return series_mul(a, series_inverse(b));
}

TruncSeries series_sqrt(const TruncSeries& a) {
  if (a.coeff(0) != RatPoly{1}) throw Error("series square root needs constant term 1");
  const std::size_t n = a.coeffs().size();
  std::vector<RatPoly> s(n);
  s[0] = RatPoly{1};
  const Rational half(1, 2);
  for (std::size_t k = 1; k < n; ++k) {
    RatPoly acc = a.coeffs()[k];
    for (std::size_t i = 1; i < k; ++i) acc -= s[i] * s[k - i];
    s[k] = acc * half;
  }
  return TruncSeries(a.order(), std::move(s));
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return series_add(a, b); }
TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return series_sub(a, b); }
TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return series_mul(a, b); }
TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return series_divide(a, b); }

std::string_view to_string(GeneratingFunction g) {
  switch (g) {
    case GeneratingFunction::kl_fan:
      return "kl_fan";
    case GeneratingFunction::kl_wheel:
      return "kl_wheel";
    case GeneratingFunction::kl_whirl:
      return "kl_whirl";
    case GeneratingFunction::z_fan:
      return "z_fan";
    case GeneratingFunction::z_wheel:
      return "z_wheel";
    case GeneratingFunction::z_whirl:
      return "z_whirl";
  }
  return "?";
}

TruncSeries gf_expand(GeneratingFunction which, int order) {
  if (order < 1 || order > TruncSeries::kMaxOrder) {
    throw std::invalid_argument("generating function order must lie in [1, 64]");
  }
  const int N = order;
  auto c = [N](std::initializer_list<Rational> cs) { return TruncSeries::constant(N, t_poly(cs)); };
  const TruncSeries one = c({1});
  const TruncSeries two = c({2});
  const TruncSeries u = TruncSeries::u_power(N, 1);
  const TruncSeries t = c({0, 1});
  const RatPoly tp = t_poly({0, 1});
  const RatPoly t_plus_1 = t_poly({1, 1});

  // D = (u-1)^2 - 4 t u^2 and E = (1-(t+1)u)^2 - 4 t u^2.
  const TruncSeries D = u_poly(N, {RatPoly{1}, RatPoly{-2}, t_poly({1, -4})});
  const TruncSeries E =
      u_poly(N, {RatPoly{1}, -(t_plus_1 * Rational(2)), t_plus_1 * t_plus_1 - tp * Rational(4)});

  switch (which) {
    case GeneratingFunction::kl_fan: {
      const TruncSeries root = series_sqrt(D);
      return one + two * u / (one - u + root);
    }
    case GeneratingFunction::kl_wheel: {
      const TruncSeries root = series_sqrt(D);
      const TruncSeries u_plus_1 = u + one;
      const TruncSeries first = two * (u - one) / (root - u + one);
      const TruncSeries second =
          two * (u * u + u - one) / (u_plus_1 * (root + u + one));
      const TruncSeries third = two * u / (u_plus_1 * root);
      return first - second + third;
    }
    case GeneratingFunction::kl_whirl: {
      const TruncSeries root = series_sqrt(D);
      const TruncSeries tu_plus_1 = t * u + one;
      return (u + one) / (two * tu_plus_1 * root) - one / (two * tu_plus_1);
    }
    case GeneratingFunction::z_fan: {
      const TruncSeries root = series_sqrt(E);
      return two / (root - c({1, 1}) * u + one);
    }
    case GeneratingFunction::z_wheel: {
      const TruncSeries root = series_sqrt(E);
      const TruncSeries a = one - c({1, 1}) * u;
      const TruncSeries numer = two * u * a * (t * (u + one) + one);
      const TruncSeries denom = a - two * t * u * u + root;
      return one / root - one - numer / denom;
    }
    case GeneratingFunction::z_whirl: {
      const TruncSeries root = series_sqrt(E);
      return one / root - one;
    }
  }
  throw std::invalid_argument("unknown generating function");
}

IntPoly integer_coefficient(const TruncSeries& s, int k) {
  try {
    return to_integer(s.coeff(k));
  } catch (const Error&) {
    throw Error("series coefficient of u^" + std::to_string(k) + " is not an integer polynomial");
  }
}

}  // namespace matkl
