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

#include "matkl/kl.hpp"

#include <exception>
#include <mutex>
#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "matkl/recurrence.hpp"

namespace matkl {
namespace {

bool in_parallel_region() {
#ifdef _OPENMP
  return omp_in_parallel() != 0;
#else
  return false;
#endif
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

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

// (n-1)! / (k! k! (n-2k-1)!)
Integer multinomial_kk(long n, long k) {
  return factorial(n - 1) / (factorial(k) * factorial(k) * factorial(n - 2 * k - 1));
}

IntPoly integral(std::vector<Rational> cs, const char* what) {
  try {
    return to_integer(RatPoly(std::move(cs)));
  } catch (const Error&) {
    throw Error(std::string(what) + " produced a non-integer coefficient");
  }
}

// Runs body(i) for i in [begin, end), in parallel when requested and not
// already inside a parallel region. The first exception is rethrown.
template <typename Body>
void for_each_index(std::size_t begin, std::size_t end, bool parallel, Body body) {
  std::exception_ptr failure;
  const bool go_parallel = parallel && !in_parallel_region();
  const auto b = static_cast<std::int64_t>(begin);
  const auto e = static_cast<std::int64_t>(end);
#pragma omp parallel for schedule(dynamic) if (go_parallel)
  for (std::int64_t i = b; i < e; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
#pragma omp critical(matkl_kl_error)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
}

void require_loopless(const RankOracleMatroid& m) {
  if (!m.is_loopless()) throw std::invalid_argument("matroid has loops");
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::fan:
      return "fan";
    case Family::square_of_path:
      return "square";
    case Family::wheel:
      return "wheel";
    case Family::whirl:
      return "whirl";
    case Family::generic:
      return "generic";
  }
  return "generic";
}

std::string_view to_string(Method m) {
  switch (m) {
    case Method::brute:
      return "brute";
    case Method::closed:
      return "closed";
    case Method::recurrence:
      return "recurrence";
  }
  return "brute";
}

Family parse_family(std::string_view s) {
  if (s == "fan") return Family::fan;
  if (s == "square" || s == "square_of_path") return Family::square_of_path;
  if (s == "wheel") return Family::wheel;
  if (s == "whirl") return Family::whirl;
  throw std::invalid_argument("unknown family '" + std::string(s) + "'");
}

Method parse_method(std::string_view s) {
  if (s == "brute") return Method::brute;
  if (s == "closed") return Method::closed;
  if (s == "recurrence") return Method::recurrence;
  throw std::invalid_argument("unknown method '" + std::string(s) + "'");
}

IntPoly KlEngine::kl(const FlatLattice& lattice) { return lookup_or_solve(lattice); }

IntPoly KlEngine::z(const FlatLattice& lattice) {
  std::vector<IntPoly> terms(lattice.size());
  for_each_index(0, lattice.size(), exec_ == Execution::parallel, [&](std::size_t i) {
    IntPoly p = i + 1 == lattice.size() ? IntPoly{1} : kl(lattice.upper_interval(i));
    terms[i] = IntPoly::monomial(Integer(1), static_cast<std::size_t>(lattice.node(i).rank)) * p;
  });
  IntPoly z;
  for (const auto& t : terms) z += t;
  return z;
}

KlEngine::Stats KlEngine::stats() const {
  Stats s;
  s.hits = hits_.load();
  s.misses = misses_.load();
  std::shared_lock lock(mutex_);
  for (const auto& [h, bucket] : memo_) s.entries += bucket.size();
  return s;
}

IntPoly KlEngine::lookup_or_solve(const FlatLattice& lattice) {
  if (lattice.rank() <= 2) return solve(lattice);
  LatticeFingerprint fp = fingerprint(lattice);
  std::vector<std::shared_ptr<const Entry>> bucket;
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(fp.hash);
    if (it != memo_.end()) bucket = it->second;
  }
  for (const auto& entry : bucket) {
    if (!(entry->fp == fp)) continue;
    if (entry->lattice == lattice ||
        (lattice.size() <= kIsomorphismLimit && entry->lattice.size() <= kIsomorphismLimit &&
         isomorphic(entry->lattice, lattice))) {
      ++hits_;
      return entry->poly;
    }
  }
  ++misses_;
  IntPoly p = solve(lattice);
  auto entry = std::make_shared<const Entry>(Entry{fp, lattice, p});
  std::unique_lock lock(mutex_);
  auto& slot = memo_[fp.hash];
  for (const auto& e : slot) {
    if (e->lattice == lattice) return p;
  }
  slot.push_back(std::move(entry));
  return p;
}

IntPoly KlEngine::solve(const FlatLattice& lattice) {
  const int r = lattice.rank();
  if (r == 0) return IntPoly{1};
  const std::vector<Integer> mu = lattice.mobius_from_bottom();
  const std::size_t n = lattice.size();
  std::vector<IntPoly> terms(n);
  for_each_index(1, n, exec_ == Execution::parallel, [&](std::size_t i) {
    IntPoly chi = lattice.lower_characteristic(i, mu);
    IntPoly p = i + 1 == n ? IntPoly{1} : lookup_or_solve(lattice.upper_interval(i));
    terms[i] = chi * p;
  });
  IntPoly s;
  for (const auto& t : terms) s += t;

  std::vector<Integer> coeffs;
  for (int i = 0; 2 * i < r; ++i) coeffs.push_back(s.coeff(static_cast<std::size_t>(r - i)));
  IntPoly p(std::move(coeffs));
  if (reverse_scaled(p, static_cast<std::size_t>(r)) - p != s) {
    throw Error("defining recursion is inconsistent on a rank " + std::to_string(r) +
                " lattice with " + std::to_string(n) + " flats");
  }
  return p;
}

IntPoly kl_poly(const RankOracleMatroid& m, Execution exec) {
  require_loopless(m);
  KlEngine engine(exec);
  return engine.kl(FlatLattice::of(m, exec));
}

IntPoly z_poly(const RankOracleMatroid& m, Execution exec) {
  require_loopless(m);
  KlEngine engine(exec);
  return engine.z(FlatLattice::of(m, exec));
}

bool defining_identity_holds(const RankOracleMatroid& m, const IntPoly& p, Execution exec) {
  require_loopless(m);
  const std::vector<Flat> fs = flats(m, exec);
  KlEngine engine(exec);
  std::vector<IntPoly> terms(fs.size());
  for_each_index(0, fs.size(), exec == Execution::parallel, [&](std::size_t i) {
    if (fs[i].elements == 0) {
      terms[i] = p;
      return;
    }
    RankOracleMatroid local = localization(m, fs[i]);
    RankOracleMatroid con = contraction(m, fs[i]);
    IntPoly chi = characteristic_polynomial(local, Execution::serial);
    IntPoly pc = engine.kl(FlatLattice::of(con, Execution::serial));
    terms[i] = chi * pc;
  });
  IntPoly rhs;
  for (const auto& t : terms) rhs += t;
  if (p.degree() > Degree(static_cast<std::size_t>(m.rank()))) return false;
  return reverse_scaled(p, static_cast<std::size_t>(m.rank())) == rhs;
}

IntPoly kl_closed(Family family, int n) {
  switch (family) {
    case Family::fan:
    case Family::square_of_path: {
      if (n < 1) throw std::invalid_argument("fan closed form needs n >= 1");
      std::vector<Rational> cs;
      for (long k = 0; 2 * k <= n - 1; ++k) {
        cs.push_back(ratio(multinomial_kk(n, k), Integer(k + 1)));
      }
      return integral(std::move(cs), "fan closed form");
    }
    case Family::wheel:
      if (n < 3) throw std::invalid_argument("wheel closed form needs n >= 3");
      return wheel_formula_unchecked(n);
    case Family::whirl: {
      if (n < 3) throw std::invalid_argument("whirl closed form needs n >= 3");
      std::vector<Rational> cs;
      for (long k = 0; 2 * k <= n - 1; ++k) {
        cs.push_back(ratio(Integer(n) * multinomial_kk(n, k), Integer(n - k)));
      }
      return integral(std::move(cs), "whirl closed form");
    }
    case Family::generic:
      break;
  }
  throw std::invalid_argument("no closed form for this family");
}

IntPoly wheel_formula_unchecked(int n) {
  if (n < 2) throw std::invalid_argument("wheel formula needs n >= 2");
  std::vector<Rational> cs;
  for (long k = 0; 2 * k <= n - 1; ++k) {
    Rational factor = ratio(Integer(k + 1), Integer(n - k));
    if (k > 0) {
      factor += ratio(Integer(k), Integer(n - k + 1));
      factor -= ratio(Integer(k), Integer(n - k - 1));
    }
    Integer count = factorial(n) / (factorial(k) * factorial(k + 1) * factorial(n - 2 * k - 1));
    cs.push_back(factor * Rational(count));
  }
  return integral(std::move(cs), "wheel closed form");
}

IntPoly z_closed(Family family, int n) {
  std::vector<Rational> cs;
  switch (family) {
    case Family::fan:
      if (n < 1) throw std::invalid_argument("fan Z closed form needs n >= 1");
      for (long k = 0; k <= n; ++k) {
        cs.push_back(ratio(binomial(n + 1, k + 1) * binomial(n + 1, k), Integer(n + 1)));
      }
      return integral(std::move(cs), "fan Z closed form");
    case Family::wheel:
      if (n < 3) throw std::invalid_argument("wheel Z closed form needs n >= 3");
      for (long k = 0; k <= n; ++k) {
        Integer sq = binomial(n, k) * binomial(n, k);
        cs.push_back(Rational(sq) -
                     ratio(2 * binomial(n, k + 1) * binomial(n, k - 1), Integer(n)));
      }
      return integral(std::move(cs), "wheel Z closed form");
    case Family::whirl:
      if (n < 3) throw std::invalid_argument("whirl Z closed form needs n >= 3");
      for (long k = 0; k <= n; ++k) cs.push_back(Rational(binomial(n, k) * binomial(n, k)));
      return integral(std::move(cs), "whirl Z closed form");
    default:
      break;
  }
  throw std::invalid_argument("no Z closed form for this family");
}

IntPoly kl_recurrence(Family family, int n) {
  const Recurrence& rec = family_recurrence(family);
  if (n < rec.offset) {
    throw std::invalid_argument("recurrence index starts at " + std::to_string(rec.offset));
  }
  return run_recurrence(rec, n - rec.offset + 1).back();
}

std::vector<IntPoly> kl_recurrence_table(Family family, int max_n) {
  const Recurrence& rec = family_recurrence(family);
  if (max_n < rec.offset) return {};
  return run_recurrence(rec, max_n - rec.offset + 1);
}

HadamardCoefficients hadamard_wheel_coeff(int n, int k) {
  if (n < 3 || k < 0 || 2 * k > n - 1) {
    throw std::invalid_argument("hadamard coefficients need n >= 3 and 0 <= k <= (n-1)/2");
  }
  const Integer N(n), K(k);
  HadamardCoefficients h;
  h.a = (K + 1) * N * N - (2 * K * K + 4 * K) * N + K * K * K + 3 * K * K - K - 1;
  h.b = ratio(factorial(n), (N - 1) * factorial(k + 1) * factorial(n + 1 - k));
  h.c = ratio((N - 1) * factorial(n - 2 - k), factorial(k) * factorial(n - 1 - 2 * k));
  return h;
}

IntPoly multiplicative_kl(const SimpleGraph& g, Execution exec) {
  KlEngine engine(exec);
  IntPoly product{1};
  for (const SimpleGraph& block : biconnected_components(g)) {
    product *= engine.kl(FlatLattice::of(graphic_matroid(block), exec));
  }
  return product;
}

RankOracleMatroid family_matroid(Family family, int n) {
  switch (family) {
    case Family::fan:
      return graphic_matroid(make_family(GraphFamily::fan, n));
    case Family::square_of_path:
      return graphic_matroid(make_family(GraphFamily::square_of_path, n));
    case Family::wheel:
      return graphic_matroid(make_family(GraphFamily::wheel, n));
    case Family::whirl:
      return whirl_matroid(n);
    case Family::generic:
      break;
  }
  throw std::invalid_argument("generic family has no matroid");
}

int family_min_n(Family family) {
  switch (family) {
    case Family::fan:
    case Family::square_of_path:
      return 1;
    case Family::wheel:
    case Family::whirl:
      return 3;
    case Family::generic:
      break;
  }
  throw std::invalid_argument("generic family has no index");
}

}  // namespace matkl
