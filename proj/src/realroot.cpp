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

#include "matkl/realroot.hpp"

#include <algorithm>
#include <stdexcept>

#include "matkl/kl.hpp"

namespace matkl {
namespace {

int sign_of(const Rational& x) { return sgn(x); }

Rational abs_rational(const Rational& x) { return sgn(x) < 0 ? Rational(-x) : x; }

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational ratio(const Integer& a, const Integer& b) {
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

const RatPoly& one_plus_t() {
  static const RatPoly p{1, 1};
  return p;
}

// Roots of a squarefree polynomial lie in (-B, B] for this Cauchy bound.
Rational cauchy_bound(const RatPoly& q) {
  Rational best = 0;
  const Rational& lead = q.leading();
  for (std::size_t i = 0; i + 1 < q.size(); ++i) {
    best = std::max(best, abs_rational(q.coeffs()[i] / lead));
  }
  return best + 1;
}

void isolate_in(const SturmChain& chain, const Rational& lo, const Rational& hi, int multiplicity,
                std::vector<IsolatedRoot>& out) {
  const int c = chain.count(lo, hi);
  if (c == 0) return;
  if (c == 1) {
    out.push_back({chain.squarefree_part(), lo, hi, multiplicity});
    return;
  }
  const Rational mid = (lo + hi) / 2;
  isolate_in(chain, lo, mid, multiplicity, out);
  isolate_in(chain, mid, hi, multiplicity, out);
}

void refine(IsolatedRoot& r) {
  const SturmChain chain(r.squarefree);
  const Rational mid = (r.lo + r.hi) / 2;
  if (chain.count(r.lo, mid) == 1) {
    r.hi = mid;
  } else {
    r.lo = mid;
  }
}

// Counts of real roots (distinct, over each squarefree factor) against degree.
bool factors_real_rooted(const SquarefreeDecomposition& d) {
  for (const auto& q : d.factors) {
    if (q.degree() <= Degree(0)) continue;
    if (SturmChain(q).count(std::nullopt, std::nullopt) != static_cast<int>(q.degree().value())) {
      return false;
    }
  }
  return true;
}

int negative_root_count(const RatPoly& q) {
  const SturmChain chain(q);
  int c = chain.count(std::nullopt, Rational(0));
  if (sgn(q.coeff(0)) == 0) --c;
  return c;
}

int positive_root_count(const RatPoly& q) {
  return SturmChain(q).count(Rational(0), std::nullopt);
}

std::vector<IsolatedRoot> expanded_decreasing(const RatPoly& p) {
  std::vector<IsolatedRoot> out;
  for (const auto& r : isolate_real_roots(p)) {
    for (int i = 0; i < r.multiplicity; ++i) out.push_back(r);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

void require_interleave_input(const IntPoly& p, const char* name) {
  if (p.is_zero()) throw std::invalid_argument(std::string(name) + " is zero");
  if (sgn(p.leading()) <= 0) {
    throw std::invalid_argument(std::string(name) + " needs a positive leading coefficient");
  }
  if (!real_rooted(p)) throw std::invalid_argument(std::string(name) + " is not real-rooted");
}

}  // namespace

SturmChain::SturmChain(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("Sturm chain of the zero polynomial");
  const RatPoly dp = p.derivative();
  squarefree_ = dp.is_zero() ? p : divmod(p, gcd(p, dp)).first;
  polys_.push_back(squarefree_);
  if (squarefree_.degree() > Degree(0)) {
    polys_.push_back(squarefree_.derivative());
    while (true) {
      RatPoly r = divmod(polys_[polys_.size() - 2], polys_.back()).second;
      if (r.is_zero()) break;
      polys_.push_back(-r);
    }
  }
}

int SturmChain::variations_at(const Rational& x) const {
  int variations = 0;
  int last = 0;
  for (const auto& q : polys_) {
    const int s = sign_of(q.eval(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmChain::variations_at_infinity(bool negative) const {
  int variations = 0;
  int last = 0;
  for (const auto& q : polys_) {
    int s = sgn(q.leading());
    if (negative && q.degree().value() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int SturmChain::count(const Bound& lo, const Bound& hi) const {
  if (lo && hi && *lo >= *hi) return 0;
  const int vlo = lo ? variations_at(*lo) : variations_at_infinity(true);
  const int vhi = hi ? variations_at(*hi) : variations_at_infinity(false);
  return vlo - vhi;
}

int count_real_roots(const RatPoly& p, const Bound& lo, const Bound& hi) {
  return SturmChain(p).count(lo, hi);
}

int count_real_roots(const IntPoly& p, const Bound& lo, const Bound& hi) {
  return count_real_roots(to_rational(p), lo, hi);
}

SquarefreeDecomposition squarefree_decomposition(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  SquarefreeDecomposition d;
  d.content = p.leading();
  if (p.degree() == Degree(0)) return d;
  const RatPoly f = monic(p);
  const RatPoly df = f.derivative();
  const RatPoly a0 = gcd(f, df);
  RatPoly b = divmod(f, a0).first;
  RatPoly c = divmod(df, a0).first;
  RatPoly dd = c - b.derivative();
  while (b.degree() > Degree(0)) {
    RatPoly a = gcd(b, dd);
    d.factors.push_back(a);
    b = divmod(b, a).first;
    c = divmod(dd, a).first;
    dd = c - b.derivative();
  }
  return d;
}

std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p) {
  std::vector<IsolatedRoot> roots;
  const SquarefreeDecomposition d = squarefree_decomposition(p);
  for (std::size_t i = 0; i < d.factors.size(); ++i) {
    const RatPoly& q = d.factors[i];
    if (q.degree() <= Degree(0)) continue;
    const SturmChain chain(q);
    const Rational bound = cauchy_bound(q);
    isolate_in(chain, Rational(-bound), bound, static_cast<int>(i) + 1, roots);
  }
  for (std::size_t i = 1; i < roots.size(); ++i) {
    for (std::size_t j = i; j > 0 && compare_roots(roots[j - 1], roots[j]) > 0; --j) {
      std::swap(roots[j - 1], roots[j]);
    }
  }
  return roots;
}

int compare_roots(IsolatedRoot& a, IsolatedRoot& b) {
  while (true) {
    if (a.hi <= b.lo) return -1;
    if (b.hi <= a.lo) return 1;
    const Rational lo = std::max(a.lo, b.lo);
    const Rational hi = std::min(a.hi, b.hi);
    const RatPoly g = gcd(a.squarefree, b.squarefree);
    if (g.degree() > Degree(0) && count_real_roots(g, lo, hi) > 0) return 0;
    if (a.hi - a.lo >= b.hi - b.lo) {
      refine(a);
    } else {
      refine(b);
    }
  }
}

bool real_rooted(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("real-rootedness of the zero polynomial");
  return factors_real_rooted(squarefree_decomposition(p));
}

bool real_rooted(const IntPoly& p) { return real_rooted(to_rational(p)); }

RootCertificate all_zeros_negative(const RatPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zeros of the zero polynomial");
  RootCertificate cert;
  const SquarefreeDecomposition d = squarefree_decomposition(p);
  cert.holds = true;
  for (const auto& q : d.factors) {
    if (q.degree() <= Degree(0)) continue;
    if (negative_root_count(q) != static_cast<int>(q.degree().value())) cert.holds = false;
  }
  cert.roots = isolate_real_roots(p);
  return cert;
}

RootCertificate all_zeros_negative(const IntPoly& p) { return all_zeros_negative(to_rational(p)); }

bool interleaves(const IntPoly& g, const IntPoly& f) {
  require_interleave_input(g, "g");
  require_interleave_input(f, "f");
  const std::size_t dg = g.degree().value();
  const std::size_t df = f.degree().value();
  if (df != dg && df != dg + 1) {
    throw std::invalid_argument("interleaving needs deg f - deg g in {0, 1}");
  }
  std::vector<IsolatedRoot> u = expanded_decreasing(to_rational(f));
  std::vector<IsolatedRoot> v = expanded_decreasing(to_rational(g));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (compare_roots(v[i], u[i]) > 0) return false;
    if (i + 1 < u.size() && compare_roots(u[i + 1], v[i]) > 0) return false;
  }
  return true;
}

bool n_sequence_check(const std::vector<Rational>& gamma, int n) {
  if (n < 0 || gamma.size() != static_cast<std::size_t>(n) + 1) {
    throw std::invalid_argument("n-sequence needs n + 1 terms");
  }
  std::vector<Rational> cs;
  for (int k = 0; k <= n; ++k) cs.push_back(gamma[k] * Rational(binomial(n, k)));
  const RatPoly p(std::move(cs));
  if (p.degree() <= Degree(0)) return true;
  const SquarefreeDecomposition d = squarefree_decomposition(p);
  if (!factors_real_rooted(d)) return false;
  int negative = 0;
  int positive = 0;
  for (const auto& q : d.factors) {
    if (q.degree() <= Degree(0)) continue;
    negative += negative_root_count(q);
    positive += positive_root_count(q);
  }
  return negative == 0 || positive == 0;
}

bool log_concave_no_internal_zeros(const IntPoly& p) {
  const auto& c = p.coeffs();
  std::size_t first = 0;
  while (first < c.size() && sgn(c[first]) == 0) ++first;
  for (std::size_t i = first; i < c.size(); ++i) {
    if (sgn(c[i]) == 0) return false;
  }
  for (std::size_t i = first + 1; i + 1 < c.size(); ++i) {
    if (c[i] * c[i] < c[i - 1] * c[i + 1]) return false;
  }
  return true;
}

IntPoly narayana(int n) {
  if (n < 1) throw std::invalid_argument("Narayana polynomial needs n >= 1");
  std::vector<Integer> cs;
  for (long k = 0; k < n; ++k) cs.push_back(binomial(n, k) * binomial(n, k + 1) / n);
  return IntPoly(std::move(cs));
}

bool verify_narayana_identity(int n) {
  const IntPoly expected = narayana(n);
  const IntPoly p = kl_closed(Family::fan, n);
  const std::size_t d = p.degree().value();
  if (2 * d > static_cast<std::size_t>(n - 1)) return false;
  const RatPoly t{0, 1};
  const RatPoly composed =
      compose_rational(to_rational(p), t, one_plus_t() * one_plus_t(), d) *
      pow(one_plus_t(), static_cast<unsigned>(n - 1 - 2 * static_cast<int>(d)));
  if (composed != to_rational(expected)) return false;
  if (n >= 2 && z_closed(Family::fan, n - 1) != expected) return false;
  return true;
}

IntPoly lucas_polynomial(int n) {
  if (n < 0) throw std::invalid_argument("Lucas index must be non-negative");
  IntPoly prev{2};
  IntPoly cur{0, 1};
  if (n == 0) return prev;
  for (int k = 2; k <= n; ++k) {
    IntPoly next = IntPoly::x() * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly fibonacci_polynomial(int n) {
  if (n < 1) throw std::invalid_argument("Fibonacci index must be positive");
  IntPoly prev{1};
  IntPoly cur{0, 1};
  if (n == 1) return prev;
  for (int k = 3; k <= n; ++k) {
    IntPoly next = IntPoly::x() * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool verify_lucas_fibonacci(int n) {
  if (n < 3) throw std::invalid_argument("Lucas/Fibonacci check needs n >= 3");
  const int m = (n - 1) / 2;
  const int big = n - 1;

  const IntPoly lucas = lucas_polynomial(big);
  std::vector<Integer> f_coeffs;
  for (int k = 0; k <= m; ++k) {
    const Rational c = hadamard_wheel_coeff(n, k).c;
    const Rational quoted =
        ratio(big * factorial(big - k - 1), factorial(k) * factorial(big - 2 * k));
    if (Rational(lucas.coeff(static_cast<std::size_t>(big - 2 * k))) != c || quoted != c) {
      return false;
    }
    f_coeffs.push_back(c.get_num());
  }
  for (int e = 0; e <= big; ++e) {
    if ((big - e) % 2 != 0 && sgn(lucas.coeff(static_cast<std::size_t>(e))) != 0) return false;
  }

  const IntPoly fib = fibonacci_polynomial(n);
  std::vector<Integer> g_coeffs;
  for (int k = 0; k <= m; ++k) {
    const Integer b = binomial(n - k - 1, k);
    if (fib.coeff(static_cast<std::size_t>(n - 2 * k - 1)) != b) return false;
    g_coeffs.push_back(b);
  }
  for (int e = 0; e < n; ++e) {
    if ((n - 1 - e) % 2 != 0 && sgn(fib.coeff(static_cast<std::size_t>(e))) != 0) return false;
  }

  return all_zeros_negative(IntPoly(std::move(f_coeffs))).holds &&
         all_zeros_negative(IntPoly(std::move(g_coeffs))).holds;
}

bool verify_wheel_z_quadratic(int n) {
  if (n < 3) throw std::invalid_argument("wheel Z quadratic needs n >= 3");
  const Integer N(n);
  std::vector<Integer> h_coeffs;
  std::vector<Rational> z_coeffs;
  for (long k = 0; k <= n; ++k) {
    const Integer K(k);
    const Integer w = (1 + K) * N * N + (1 - 2 * K - K * K) * N + 2 * K * K;
    h_coeffs.push_back(w * binomial(n, k));
    z_coeffs.push_back(
        ratio(w * factorial(n - 1) * binomial(n, k), factorial(k + 1) * factorial(n + 1 - k)));
  }
  const IntPoly h(std::move(h_coeffs));
  const IntPoly quadratic{N + 1, N * N - N + 4, N + 1};
  const IntPoly rhs = IntPoly{N} * quadratic * pow(IntPoly{1, 1}, static_cast<unsigned>(n - 2));
  if (h != rhs) return false;

  if (RatPoly(std::move(z_coeffs)) != to_rational(z_closed(Family::wheel, n))) return false;

  const Integer disc =
      quadratic.coeff(1) * quadratic.coeff(1) - 4 * quadratic.coeff(0) * quadratic.coeff(2);
  if (disc != (N - 1) * (N - 2) * (N * N + N + 6) || sgn(disc) <= 0) return false;
  return all_zeros_negative(h).holds;
}

bool verify_hadamard_factorization(int n) {
  const IntPoly p = kl_closed(Family::wheel, n);
  const int m = (n - 1) / 2;
  if (p.degree() > Degree(static_cast<std::size_t>(m))) return false;
  for (int k = 0; k <= m; ++k) {
    const HadamardCoefficients h = hadamard_wheel_coeff(n, k);
    if (Rational(h.a) * h.b * h.c != Rational(p.coeff(static_cast<std::size_t>(k)))) return false;
  }
  return true;
}

bool verify_wheel_n_sequence(int n) {
  const int m = (n - 1) / 2;
  std::vector<Rational> gamma;
  for (int k = 0; k <= m; ++k) gamma.push_back(Rational(hadamard_wheel_coeff(n, k).a));
  return n_sequence_check(gamma, m);
}

}  // namespace matkl
